from enum import Enum, IntEnum

class StrEnum(str, Enum):
    def __str__(self):
        return self.value

class LogLevel(StrEnum):
    """Log level enumeration."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"

class Verdict(StrEnum):
    """Answer of a recognition query."""
    YES = "yes"
    NO = "no"

class RecognitionMode(StrEnum):
    """Which class a recognition query targets."""
    LAMINAR = "laminar"
    STRONGLY = "strongly"

class RoleKind(StrEnum):
    """Role of a vertex in a reduction graph."""
    POS_LITERAL = "pos_literal"
    NEG_LITERAL = "neg_literal"
    SPINE_CHAIN = "spine_chain"
    CLAUSE_HUB = "clause_hub"
    OCCURRENCE_CHAIN = "occurrence_chain"

class CommandName(StrEnum):
    """CLI subcommands."""
    STATS = "stats"
    RECOGNIZE = "recognize"
    INDEX = "index"
    GENERATE = "generate"
    REDUCE = "reduce"
    AT = "at"

class ExitCode(IntEnum):
    """Process exit codes of the CLI."""
    HOLDS = 0
    DOES_NOT_HOLD = 1
    USAGE_ERROR = 2
    SIZE_GUARD = 3
