# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.


class OrbitwistorError(Exception):
    pass


class DimensionError(OrbitwistorError):
    pass


class InvalidTriple(OrbitwistorError):
    pass


class NotRegular(OrbitwistorError):
    pass


class DimensionMismatch(OrbitwistorError):
    def __init__(self, message, expected=None, found=None):
        super(DimensionMismatch, self).__init__(message)
        self.expected = expected
        self.found = found


class Unsolvable(OrbitwistorError):
    pass


class FitFailure(OrbitwistorError):
    def __init__(self, message, residual=None):
        super(FitFailure, self).__init__(message)
        self.residual = residual


class IllConditioned(OrbitwistorError):
    def __init__(self, message, condition=None):
        super(IllConditioned, self).__init__(message)
        self.condition = condition


class NotOnSlice(OrbitwistorError):
    pass


class PathSingular(OrbitwistorError):
    def __init__(self, message, t=None, p1_ratio=None):
        super(PathSingular, self).__init__(message)
        self.t = t
        self.p1_ratio = p1_ratio


class NoConvergence(OrbitwistorError):
    def __init__(self, message, t=None, residual=None):
        super(NoConvergence, self).__init__(message)
        self.t = t
        self.residual = residual


class Degenerate(OrbitwistorError):
    pass


class DomainError(OrbitwistorError):
    pass


class StepTooLarge(OrbitwistorError):
    pass


class CalibrationError(OrbitwistorError):
    pass


class ParseError(OrbitwistorError):
    pass
