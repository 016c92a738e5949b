"""Domain exceptions shared by every module.

Each error carries a stable machine-readable ``code`` so the HTTP layer and
the CLI can translate failures without matching on message text.
"""


class GameError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.__class__.__name__)


# --- pack loading / authoring ---

class ParseError(GameError):
    code = "parse_error"


class ValidationError(GameError):
    code = "validation_error"


class InfeasibleCount(GameError):
    code = "infeasible_count"


# --- sequence game ---

class UnknownSymbol(GameError):
    code = "unknown_symbol"


class GameOver(GameError):
    code = "game_over"


class LengthOutOfRange(GameError):
    code = "length_out_of_range"


class HintsExhausted(GameError):
    code = "hints_exhausted"


class GameNotFinished(GameError):
    code = "game_not_finished"


# --- language model ---

class EmptyCorpus(GameError):
    code = "empty_corpus"


# --- tag-team game ---

class InvalidPrompt(GameError):
    code = "invalid_prompt"


class WrongPhase(GameError):
    code = "wrong_phase"


class NotACandidate(GameError):
    code = "not_a_candidate"


class BadProposal(GameError):
    code = "bad_proposal"


class EmptyResponse(GameError):
    code = "empty_response"


class AlreadyFinished(GameError):
    code = "already_finished"


class ResponseLimitReached(GameError):
    code = "response_limit_reached"


# --- service / persistence ---

class UnknownSession(GameError):
    code = "unknown_session"


class BadPagination(GameError):
    code = "bad_pagination"
