class SeriesIdentity:
    """lhs == rhs as truncated series, exactly or mod `modulus`."""

    def __init__(self, identity_id: str, lhs, rhs, modulus=None, note: str = "", order=None):
        if modulus is not None and (not isinstance(modulus, int) or modulus < 2):
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        self._identity_id = identity_id
        self._lhs = lhs
        self._rhs = rhs
        self._modulus = modulus
        self._note = note
        self._order = order

    @property
    def identity_id(self) -> str:
        return self._identity_id

    @property
    def lhs(self):
        return self._lhs

    @property
    def rhs(self):
        return self._rhs

    @property
    def modulus(self):
        return self._modulus

    @property
    def note(self) -> str:
        return self._note

    @property
    def order(self):
        return self._order

    @property
    def statement(self) -> str:
        relation = "=" if self._modulus is None else "=="
        suffix = "" if self._modulus is None else f" (mod {self._modulus})"
        return f"{self._lhs} {relation} {self._rhs}{suffix}"

    def __repr__(self):
        return f"<SeriesIdentity {self._identity_id}: {self.statement}>"

    def __eq__(self, other):
        if not isinstance(other, SeriesIdentity):
            return False
        return self._identity_id == other._identity_id

    def __lt__(self, other):
        return self._identity_id < other._identity_id

    def __hash__(self):
        return hash(self._identity_id)


class IdentityGroup:
    """Several sample identities checked together under one id."""

    def __init__(self, group_id: str, identities, note: str = ""):
        self._group_id = group_id
        self._identities = tuple(identities)
        self._note = note

    @property
    def group_id(self) -> str:
        return self._group_id

    @property
    def identities(self) -> tuple:
        return self._identities

    @property
    def note(self) -> str:
        return self._note

    @property
    def statement(self) -> str:
        return "; ".join(i.statement for i in self._identities)

    def __repr__(self):
        return f"<IdentityGroup {self._group_id} ({len(self._identities)} samples)>"

    def __eq__(self, other):
        if not isinstance(other, IdentityGroup):
            return False
        return self._group_id == other._group_id

    def __lt__(self, other):
        return self._group_id < other._group_id

    def __hash__(self):
        return hash(self._group_id)
