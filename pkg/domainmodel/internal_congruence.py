from domainmodel.congruence_family import _check_modulus, _check_progression


class InternalCongruence:
    """c(A1 n + B1) == c(A2 n + B2) (mod M) for every n >= 0."""

    def __init__(self, congruence_id: str, source, modulus: int, lhs, rhs, params=None, order=None):
        for stride, offset in (lhs, rhs):
            _check_progression(stride, offset)
        _check_modulus(modulus)
        self._congruence_id = congruence_id
        self._source = source
        self._modulus = modulus
        self._lhs = tuple(lhs)
        self._rhs = tuple(rhs)
        self._params = dict(params or {})
        self._order = order

    @property
    def congruence_id(self) -> str:
        return self._congruence_id

    @property
    def source(self):
        return self._source

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def lhs(self) -> tuple:
        return self._lhs

    @property
    def rhs(self) -> tuple:
        return self._rhs

    @property
    def params(self) -> dict:
        return dict(self._params)

    @property
    def order(self):
        return self._order

    @property
    def statement(self) -> str:
        (a1, b1), (a2, b2) = self._lhs, self._rhs
        return f"{self._source}({a1}n+{b1}) == {self._source}({a2}n+{b2}) (mod {self._modulus})"

    def __repr__(self):
        return f"<InternalCongruence {self._congruence_id}: {self.statement}>"

    def __eq__(self, other):
        if not isinstance(other, InternalCongruence):
            return False
        return self._congruence_id == other._congruence_id

    def __lt__(self, other):
        return self._congruence_id < other._congruence_id

    def __hash__(self):
        return hash(self._congruence_id)
