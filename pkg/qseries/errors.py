class SeriesError(ValueError):
    pass


class TruncationError(SeriesError):
    """Raised when a read or comparison reaches past the truncation order."""


class NonUnitError(SeriesError):
    def __init__(self, constant, modulus=None):
        self.constant = constant
        self.modulus = modulus
        if modulus is None:
            message = f"cannot invert series with constant term {constant} (must be 1 or -1)"
        else:
            message = f"cannot invert series with constant term {constant}: not a unit mod {modulus}"
        super().__init__(message)


class EtaSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        self.reason = message
        super().__init__(f"{message} at position {position}")

    def caret(self) -> str:
        # two-line diagnostic: the input, then a caret under the offending character
        return f"{self.text}\n{' ' * self.position}^"


class ConfigurationError(ValueError):
    pass
