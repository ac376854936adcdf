"""Exception hierarchy with stable error codes.

Every error callers can hit maps to exactly one (CLI exit code, HTTP status)
pair; the table at the bottom is the single source of truth and is what the
CLI and the HTTP service consult.
"""


class HexpointError(Exception):
    """Base for all library errors."""

    code = "Internal"
    exit_code = 2
    http_status = 500


class BadRequest(HexpointError):
    code = "BadRequest"
    http_status = 400


class OccupiedCell(HexpointError):
    code = "OccupiedCell"
    http_status = 409


class OutOfBounds(HexpointError):
    code = "OutOfBounds"
    http_status = 422


class BoardParseError(HexpointError):
    code = "BoardParseError"
    http_status = 422


class BoardNotFull(HexpointError):
    code = "BoardNotFull"
    http_status = 409


class DegreeTooHigh(HexpointError):
    code = "DegreeTooHigh"
    http_status = 422


class BoardTooLarge(HexpointError):
    code = "BoardTooLarge"
    exit_code = 3
    http_status = 503


class GameOver(HexpointError):
    code = "GameOver"
    http_status = 409


class ResourceLimit(HexpointError):
    code = "ResourceLimit"
    exit_code = 3
    http_status = 503


class MapSyntaxError(HexpointError):
    """Raised by the expression parser; carries the byte offset and the
    token kinds that would have been accepted there."""

    code = "SyntaxError"
    http_status = 422

    def __init__(self, message: str, offset: int, expected: frozenset[str]):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = expected


class ArityError(HexpointError):
    code = "ArityError"
    http_status = 422


class MapRangeError(HexpointError):
    code = "MapRangeError"
    http_status = 422


class DivisionByZero(HexpointError):
    code = "DivisionByZero"
    http_status = 422


class NumericDomainError(HexpointError):
    code = "NumericDomainError"
    http_status = 422


class UnknownMapName(HexpointError):
    code = "UnknownMapName"
    http_status = 404


class MissingLabel(HexpointError):
    code = "MissingLabel"
    http_status = 422


class ImproperLabeling(HexpointError):
    code = "ImproperLabeling"
    http_status = 422


class WinningPathExists(HexpointError):
    """The coloring handed to the displacement construction already contains
    a winning chain; the chain is attached for reporting."""

    code = "WinningPathExists"
    http_status = 409

    def __init__(self, player: str, path: tuple):
        super().__init__(f"{player} already connects its edges via {list(path)}")
        self.player = player
        self.path = path


class OutOfBoundsDisplacement(HexpointError):
    code = "OutOfBoundsDisplacement"
    http_status = 422


class CorruptSession(HexpointError):
    code = "CorruptSession"
    http_status = 500


class UnknownSession(HexpointError):
    code = "UnknownSession"
    http_status = 404


#: code -> (exit code, HTTP status); rendered in the README.
ERROR_TABLE = {
    cls.code: (cls.exit_code, cls.http_status)
    for cls in [
        BadRequest, OccupiedCell, OutOfBounds, BoardParseError, BoardNotFull,
        DegreeTooHigh, BoardTooLarge, GameOver, ResourceLimit,
        MapSyntaxError, ArityError, MapRangeError, DivisionByZero,
        NumericDomainError, UnknownMapName, MissingLabel, ImproperLabeling,
        WinningPathExists, OutOfBoundsDisplacement, CorruptSession,
        UnknownSession,
    ]
}
