# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"""Problem files and report rendering."""

from .problemfile import ProblemSyntaxError, format_problem, parse_problem
from .render import render_report, report_to_dict
