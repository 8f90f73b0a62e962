# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license

from .engine import *
from .errors import PiforgeError
from .matroid import ColumnMatroid, PiMonomial
from .qspace import (DimensionMismatchError, DimExp, InvalidBasisError,
                     LocalBasis, NotExpandableError, NotInvertibleError,
                     Quantity)
from .report import (ProblemSyntaxError, format_problem, parse_problem,
                     render_report)
from .zlinalg import (CanonicalExponents, DependentColumnsError,
                      ExponentOverflowError, IntMatrix, NoSolutionError,
                      NotPseudocircuitError)
