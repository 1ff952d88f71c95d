"""Exception taxonomy shared by all zhbraille modules."""


class ZhBrailleError(Exception):
    """Base class for all toolkit errors."""


class InvalidDotError(ZhBrailleError):
    """A dot index outside 1-6 was used to build a cell."""


class NotBrailleError(ZhBrailleError):
    """A character outside the U+2800-U+283F block was treated as a cell."""


class DuplicateEntryError(ZhBrailleError):
    """A scheme table defines the same key twice."""


class InjectivityError(ZhBrailleError):
    """Two initials (or two tones) share one braille cell."""


class IncompleteSchemeError(ZhBrailleError):
    """The scheme lacks an entry required by the syllable inventory."""


class MalformedSyllableError(ZhBrailleError):
    """A cell sequence does not follow the (initial?)(final)(tone?) grammar."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class UnknownCharacterError(ZhBrailleError):
    """A Chinese character has no pronunciation in the lexicon."""

    def __init__(self, char, offset):
        super().__init__(f"no pronunciation for {char!r} at offset {offset}")
        self.char = char
        self.offset = offset


class CorpusParseError(ZhBrailleError):
    """A corpus line does not follow the id<TAB>sentence convention."""

    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class InsufficientDataError(ZhBrailleError):
    """Not enough input to perform the requested operation."""


class EmptySplitError(ZhBrailleError):
    """Statistics were requested for a split with no pairs."""


class PairedInputError(ZhBrailleError):
    """Hypothesis/reference inputs do not pair up one-to-one."""


class UndecodablePositionError(ZhBrailleError):
    """A lattice position has no candidate characters."""

    def __init__(self, position):
        super().__init__(f"no candidates at lattice position {position}")
        self.position = position


class ConfigError(ZhBrailleError):
    """A pipeline configuration is missing or inconsistent."""
