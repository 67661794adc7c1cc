# -----------------------------------------------------------
# CensusExceptions.py
# Description: errors of the (p, q) census and of the settings it runs with.
# -----------------------------------------------------------

class CensusError(Exception):
    pass


class InvalidParametersError(CensusError):
    pass


class InvalidAngleError(CensusError):
    pass


class ConfigurationError(CensusError):
    pass
