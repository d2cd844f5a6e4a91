from qseries.errors import ConfigurationError


def exact_quotient(numerator: int, denominator: int) -> int:
    """numerator / denominator, refusing anything that is not an exact integer."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ConfigurationError(f"{numerator}/{denominator} is not an integer")
    return quotient


def _check_progression(stride, offset):
    if not isinstance(stride, int) or stride < 1:
        raise ConfigurationError(f"stride must be a positive integer, got {stride!r}")
    if not isinstance(offset, int) or offset < 0:
        raise ConfigurationError(f"offset must be a non-negative integer, got {offset!r}")


def _check_modulus(modulus):
    if not isinstance(modulus, int) or modulus < 2:
        raise ConfigurationError(f"modulus must be an integer >= 2, got {modulus!r}")


class CongruenceFamily:
    """c(A n + B) == 0 (mod M) for every n >= 0, c the coefficients of `source`."""

    def __init__(self, family_id: str, source, stride: int, offset: int, modulus: int, params=None, order=None):
        _check_progression(stride, offset)
        _check_modulus(modulus)
        self._family_id = family_id
        self._source = source
        self._stride = stride
        self._offset = offset
        self._modulus = modulus
        self._params = dict(params or {})
        # fixed order for instances too deep for the suite order
        self._order = order

    @property
    def family_id(self) -> str:
        return self._family_id

    @property
    def source(self):
        return self._source

    @property
    def stride(self) -> int:
        return self._stride

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def params(self) -> dict:
        return dict(self._params)

    @property
    def order(self):
        return self._order

    @property
    def statement(self) -> str:
        return f"{self._source}({self._stride}n+{self._offset}) == 0 (mod {self._modulus})"

    def __repr__(self):
        return f"<CongruenceFamily {self._family_id}: {self.statement}>"

    def __eq__(self, other):
        if not isinstance(other, CongruenceFamily):
            return False
        return self._family_id == other._family_id

    def __lt__(self, other):
        return self._family_id < other._family_id

    def __hash__(self):
        return hash(self._family_id)
