# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license

MODE_UNBALANCED = "unbalanced"
MODE_BALANCED = "balanced"
MODES_ALL = [MODE_UNBALANCED, MODE_BALANCED]
DEFAULT_MODE = MODE_UNBALANCED

KAPPA_AUTO = "auto"

FORMAT_TEXT = "text"
FORMAT_STRUCTURED = "structured"
FORMATS_ALL = [FORMAT_TEXT, FORMAT_STRUCTURED]
DEFAULT_FORMAT = FORMAT_TEXT

STATUS_OK = "ok"
STATUS_NOT_PRECOMPLETE = "not_precomplete"
STATUS_KAPPA_INSUFFICIENT = "kappa_insufficient"

TEMPLATE_SUM = "s=+1"
TEMPLATE_INVERSE_SUM = "s=-1"

PSI = "Psi"
CONSTANT = "k"

# Exhaustive subset enumeration stays exact but grows as 2^n
MAX_VARIABLES = 16

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

EXIT_OK = 0
EXIT_ANALYSIS_ERROR = 1
EXIT_PARSE_ERROR = 2
EXIT_NOT_PRECOMPLETE = 3
EXIT_KAPPA_INSUFFICIENT = 4

VERSION = "0.1.0"
