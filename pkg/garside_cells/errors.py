#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Exceptions raised by the garside_cells package
# Each exception carries the exit code used by the command line front end (see cli.py)
#
#    0: success
#    1: verification failure / internal invariant violated
#    2: usage or parse error
#    3: budget exceeded
#    4: no anchor found during recovery
# --------------------------------------------------------------------------------------------------------------

# -------- classes

class GarsideCellsError(Exception):
    exit_code = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message

# ---- usage / input errors
class UsageError(GarsideCellsError):
    exit_code = 2

class ConfigError(UsageError):
    pass

class UnknownGenerator(UsageError):
    pass

class InvalidCoxeterMatrix(UsageError):
    pass

class PolyParseError(UsageError):
    pass

class WordParseError(UsageError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position

class BadBaseChoice(UsageError):
    pass

class RadiusTooSmall(UsageError):
    pass

class VertexOutsideGraph(UsageError):
    pass

class IndexOutOfRange(UsageError):
    pass

# ---- budgets
class BudgetExceeded(GarsideCellsError):
    exit_code = 3

class WavefrontOutOfRadius(BudgetExceeded):
    pass

# ---- model breakdown
class NoAnchorFound(GarsideCellsError):
    exit_code = 4

# ---- complexes
class ZigzagTruncationViolated(GarsideCellsError):
    pass

class InconsistentDifferential(GarsideCellsError):
    pass

class NotMinimal(GarsideCellsError):
    pass

class EmptyComplex(GarsideCellsError):
    pass
