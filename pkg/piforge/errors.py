# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"""Root of the piforge exception hierarchy."""


class PiforgeError(Exception):
    """Base class for every error raised by piforge"""
