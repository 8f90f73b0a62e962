# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
import sys

from piforge.cli import main

sys.exit(main())
