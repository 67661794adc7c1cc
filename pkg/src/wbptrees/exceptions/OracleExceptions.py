# -----------------------------------------------------------
# OracleExceptions.py
# Description: errors of the brute-force tree enumeration.
# -----------------------------------------------------------

class OracleError(Exception):
    pass


class InvalidTreeError(OracleError):
    pass


class OracleBoundError(OracleError):
    pass


class SymmetryError(OracleError):
    pass
