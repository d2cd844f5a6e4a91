"""Every congruence family, internal congruence, identity and proof step the harness verifies.

Entries are grouped into suites. Families whose ninth index A*8 + B lies past
the suite order are pinned to a deeper order so that they are never vacuous.
"""
import re

from config import DEEP_ORDER, DEFAULT_ORDER, IDENTITY_ORDER
from domainmodel.congruence_family import CongruenceFamily, exact_quotient
from domainmodel.internal_congruence import InternalCongruence
from domainmodel.recipe import ColoredSource, Component, Dilated, EtaTerm, Monomial, Progression, Sum, Theta
from domainmodel.series_identity import IdentityGroup, SeriesIdentity
from qseries.errors import ConfigurationError
from qseries.etaparser import parse_eta

DEFAULT_BOUNDS = {
    "THM_1_1": {"j": range(0, 3)},
    "COR_3_2": {"j": range(0, 3)},
    "THM_1_3": {"alpha": range(0, 3)},
    "THM_4_1": {"t": range(0, 9)},
    "THM_4_2": {"t": range(0, 9)},
    "COR_4_3": {"alpha": range(0, 2)},
    "COR_4_4": {"j": range(0, 2), "t": range(0, 9)},
}
PARAM_LIMITS = {"t": range(0, 9)}

# (k mod 7, B) for a_{7j+k}(7n+B) == 0 (mod 7)
MOD7_CASES = ((1, 5), (3, 2), (4, 4), (5, 6), (7, 3))

LEMMA_2_3_SAMPLES = ((3, 1, 1), (3, 2, 3), (5, 1, 1), (5, 2, 2), (7, 1, 1))

SUITES = (
    "ramanujan",
    "thm_1_1",
    "thm_1_2",
    "cor_3_2",
    "thm_1_3",
    "thm_4_1",
    "thm_4_2",
    "cor_4_3",
    "cor_4_4",
    "induction",
    "lemmas",
    "proof_steps",
)


def eta(text, coefficient=1, shift=0):
    return EtaTerm(parse_eta(text), coefficient, shift)


def D(k=1):
    return Theta("D", k)


def Y(k=1):
    return Theta("Y", k)


def lemma_2_1_rhs():
    """(D(q^9)^2 + 2q D(q^9) Y(q^3) + q^2 Y(q^3)^2) / D(q^3)."""
    return Sum(D(9) * D(9), Monomial(2, 1) * D(9) * Y(3), Monomial(1, 2) * Y(3) * Y(3)) / D(3)


def lemma_2_2_rhs():
    """f6 f9^2/(f3 f18) + q f18^2/f9."""
    return Sum(eta("f6*f9^2/(f3*f18)"), eta("f18^2/f9", 1, 1))


def theorem_4_2_residues(t: int):
    """(r_t, s_t): r_t = t or t + 9 and s_t = 0 or 1 as t is even or odd."""
    return (t, 0) if t % 2 == 0 else (t + 9, 1)


def parse_param_bounds(text: str) -> dict:
    """'alpha=0..2,j=0..2,t=0..8' -> {'alpha': range(0, 3), ...}."""
    bounds = {}
    if not text:
        return bounds
    for item in text.split(","):
        match = re.fullmatch(r"\s*(\w+)\s*=\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*", item)
        if match is None:
            raise ConfigurationError(f"malformed parameter range {item!r} (expected name=lo..hi)")
        name, low, high = match.group(1), int(match.group(2)), match.group(3)
        high = low if high is None else int(high)
        if high < low:
            raise ConfigurationError(f"empty parameter range {item!r}")
        bounds[name] = range(low, high + 1)
    return bounds


def entry_id(entry) -> str:
    for attribute in ("family_id", "congruence_id", "identity_id", "group_id"):
        if hasattr(entry, attribute):
            return getattr(entry, attribute)
    raise TypeError(f"not a registry entry: {entry!r}")


class Registry:
    def __init__(self, order: int = DEFAULT_ORDER, param_bounds=None):
        self._order = order
        self._overrides = dict(param_bounds or {})
        for name, values in self._overrides.items():
            limit = PARAM_LIMITS.get(name)
            if limit is not None and not set(values) <= set(limit):
                raise ConfigurationError(f"parameter {name} must stay within {limit.start}..{limit.stop - 1}")
        self._entries = {}
        self._suites = {name: [] for name in SUITES}
        self._build()

    @property
    def order(self) -> int:
        return self._order

    @property
    def ids(self) -> list:
        return sorted(self._entries)

    def entry(self, entry_id_: str):
        return self._entries[entry_id_]

    def suite(self, suite_id: str) -> list:
        if suite_id == "all":
            return [self._entries[i] for i in self.ids]
        if suite_id in self._suites:
            return sorted(self._suites[suite_id], key=entry_id)
        if suite_id in self._entries:
            return [self._entries[suite_id]]
        raise ConfigurationError(f"unknown suite {suite_id!r}")

    def suite_of(self, entry_id_: str) -> str:
        for name, entries in self._suites.items():
            if any(entry_id(e) == entry_id_ for e in entries):
                return name
        raise KeyError(entry_id_)

    def bounds(self, family: str, name: str) -> range:
        return self._overrides.get(name, DEFAULT_BOUNDS[family][name])

    def _add(self, suite: str, entry):
        key = entry_id(entry)
        if key in self._entries:
            raise ConfigurationError(f"duplicate registry id {key}")
        self._entries[key] = entry
        self._suites[suite].append(entry)

    def _deep_order(self, stride, offset):
        return max(DEEP_ORDER, 8 * stride + offset) if 8 * stride + offset > self._order else None

    def _vanishing(self, suite, family_id, k, stride, offset, modulus, **params):
        family = CongruenceFamily(
            family_id, ColoredSource(k), stride, offset, modulus, params, self._deep_order(stride, offset)
        )
        self._add(suite, family)

    def _build(self):
        self._ramanujan()
        self._theorem_1_1()
        self._vanishing("thm_1_2", "THM_1_2", 5, 5, 3, 5)
        for j in self.bounds("COR_3_2", "j"):
            self._vanishing("cor_3_2", f"COR_3_2_j{j}", 5 * j + 5, 5, 3, 5, j=j)
        self._deep_families()
        self._theorem_4_1_and_4_2()
        self._corollary_4_4()
        self._lemmas()
        self._proof_steps()

    def _ramanujan(self):
        for modulus, offset in ((5, 4), (7, 5), (11, 6)):
            self._vanishing("ramanujan", f"RAM_{modulus}", 1, modulus, offset, modulus)

    def _theorem_1_1(self):
        for j in self.bounds("THM_1_1", "j"):
            for residue, offset in MOD7_CASES:
                self._vanishing("thm_1_1", f"THM_1_1_k{residue}_j{j}", 7 * j + residue, 7, offset, 7, j=j)

    def _deep_families(self):
        for alpha in self.bounds("THM_1_3", "alpha"):
            stride = 3 ** (2 * alpha + 3)
            offset = exact_quotient(153 * 9 ** alpha - 1, 8)
            self._vanishing("thm_1_3", f"THM_1_3_a{alpha}", 5, stride, offset, 3, alpha=alpha)
        for alpha in self.bounds("COR_4_3", "alpha"):
            stride = 3 ** (2 * alpha + 3)
            self._vanishing(
                "cor_4_3", f"COR_4_3_A20_a{alpha}", 20, stride, exact_quotient(198 * 9 ** alpha - 6, 8), 3, alpha=alpha
            )
            self._vanishing(
                "cor_4_3", f"COR_4_3_A23_a{alpha}", 23, stride, exact_quotient(207 * 9 ** alpha - 7, 8), 3, alpha=alpha
            )

    def _theorem_4_1_and_4_2(self):
        for t in self.bounds("THM_4_1", "t"):
            self._vanishing("thm_4_1", f"THM_4_1_t{t}", 3 * t + 2, 27, 18 + t, 3, t=t)
        for t in self.bounds("THM_4_2", "t"):
            r, s = theorem_4_2_residues(t)
            source = ColoredSource(3 * t + 2)
            self._add("thm_4_2", InternalCongruence(f"THM_4_2_t{t}", source, 3, (27, r), (3, s), {"t": t}))
            # n -> 3n gives the step used by the induction proofs of the deep families
            if t in (1, 6, 7):
                self._add("induction", InternalCongruence(f"IND_t{t}", source, 3, (81, r), (9, s), {"t": t}))

    def _corollary_4_4(self):
        for j in self.bounds("COR_4_4", "j"):
            for t in self.bounds("COR_4_4", "t"):
                self._vanishing("cor_4_4", f"COR_4_4_j{j}_t{t}", 27 * j + 3 * t + 2, 27, 18 + t, 3, j=j, t=t)

    def _lemmas(self):
        self._add("lemmas", SeriesIdentity("D_PROD", D(), eta("f1^2/f2"), note="D(q) = f1^2/f2"))
        self._add("lemmas", SeriesIdentity("Y_PROD", Y(), eta("f1*f6^2/(f2*f3)"), note="Y(q) = f1 f6^2/(f2 f3)"))
        self._add(
            "lemmas",
            SeriesIdentity("LEM_2_1", eta("f2/f1^2"), lemma_2_1_rhs(), 3, note="3-dissection of f2/f1^2 mod 3"),
        )
        self._add(
            "lemmas", SeriesIdentity("LEM_2_2", eta("f2^2/f1"), lemma_2_2_rhs(), note="3-dissection of f2^2/f1")
        )
        samples = [
            SeriesIdentity(
                f"LEM_2_3_p{p}_a{a}_b{b}",
                EtaTerm(parse_eta(f"f{a}^{b * p}")),
                EtaTerm(parse_eta(f"f{a * p}^{b}")),
                p,
                note=f"f{a}^{b * p} == f{a * p}^{b} (mod {p})",
            )
            for p, a, b in LEMMA_2_3_SAMPLES
        ]
        self._add("lemmas", IdentityGroup("LEM_2_3", samples, note="f_a^(bp) == f_ap^b (mod p)"))

    def _step(self, identity_id, lhs, rhs, modulus=3):
        order = IDENTITY_ORDER if self._order > IDENTITY_ORDER else None
        self._add("proof_steps", SeriesIdentity(identity_id, lhs, rhs, modulus, order=order))

    def _proof_steps(self):
        a5 = ColoredSource(5)
        self._step("PS_5_MOD5_1", a5, eta("f10/(f5*f2)"), 5)
        self._step("PS_5_MOD5_2", a5, eta("f10/f5") * Dilated(ColoredSource(1), 2), 5)
        for j in self.bounds("COR_3_2", "j"):
            if j:
                self._step(f"PS_COR_3_2_j{j}", ColoredSource(5 * j + 5), eta(f"f10^{j}/f5^{j}") * a5, 5)
        for j in self.bounds("COR_4_4", "j"):
            for t in self.bounds("COR_4_4", "t"):
                if j:
                    self._step(
                        f"PS_COR_4_4_j{j}_t{t}",
                        ColoredSource(27 * j + 3 * t + 2),
                        eta(f"f54^{j}/f27^{j}") * ColoredSource(3 * t + 2),
                    )
        for k, displays in MOD3_CHAINS.items():
            for stage, (view, rhs) in enumerate(displays(), start=1):
                self._step(f"PS_{k}_{stage}", _view(k, view), rhs)


def _view(k, view):
    """The left-hand side of a proof display: a progression or component of a_k."""
    source = ColoredSource(k)
    if view == "whole":
        return source
    if view[0] == "ext":
        _, stride, offset = view
        return Progression(source, stride, offset)
    # ("comp", m, B, r): the part of sum a_k(m n + B) q^n on exponents == r (mod 3)
    _, m, b, r = view
    inner = source if m == 1 else Progression(source, m, b)
    return Component(inner, 3, r)


def _whole(t):
    # a_{3t+2} == (f6/f3)^t f2/f1^2 and its Lemma 2.1 form
    prefix = eta(f"f6^{t}/f3^{t}")
    return [("whole", prefix * eta("f2/f1^2")), ("whole", prefix * lemma_2_1_rhs())]


def _chain_5():
    return _whole(1) + [
        (("comp", 1, 0, 1), eta("f6/f3", 2, 1) * D(9) * Y(3) / D(3)),
        (("comp", 1, 0, 1), eta("f6*f9*f18/f3^2", 2, 1)),
        (("ext", 3, 1), eta("f3*f6*f2/f1^2", 2)),
        (("ext", 3, 1), eta("f1*f2*f6", 2)),
        (("comp", 3, 1, 0), eta("f3*f6", 2) * D(9) * D(9) / D(3)),
        (("ext", 9, 1), eta("f1*f2", 2) * D(3) * D(3) / D()),
        (("ext", 9, 1), eta("f3^4/f6^2", 2) * eta("f2^2/f1")),
        (("ext", 9, 1), eta("f3^4/f6^2", 2) * lemma_2_2_rhs()),
        (("comp", 9, 1, 1), eta("f3^4/f6^2", 2) * eta("f18^2/f9", 1, 1)),
        (("comp", 9, 1, 1), eta("f3*f6^4", 2, 1)),
        (("ext", 27, 10), eta("f1*f2^4", 2)),
        (("ext", 27, 10), eta("f1*f2*f6", 2)),
    ]


def _chain_8():
    return _whole(2) + [
        (("comp", 1, 0, 2), eta("f6^2/f3^2", 1, 2) * Y(3) * Y(3) / D(3)),
        (("comp", 1, 0, 2), eta("f6*f18^4/(f3^2*f9^2)", 1, 2)),
        (("ext", 3, 2), eta("f2*f6^4/(f1^2*f3^2)")),
        (("comp", 3, 2, 0), eta("f6^4/f3^2") * D(9) * D(9) / D(3)),
        (("ext", 9, 2), eta("f2^4/f1^2") * D(3) * D(3) / D()),
        (("ext", 9, 2), eta("f2^3*f3^4/(f6^2*f1^3)") * eta("f2^2/f1")),
        (("ext", 9, 2), eta("f3^3/f6") * eta("f2^2/f1")),
        (("ext", 9, 2), eta("f3^3/f6") * lemma_2_2_rhs()),
        (("ext", 3, 0), eta("f2^3*f3^4/(f1^4*f6^2)")),
        (("ext", 3, 0), eta("f1^8/f2^3")),
        (("comp", 9, 2, 0), eta("f3^3/f6") * eta("f6*f9^2/(f3*f18)")),
        (("comp", 9, 2, 0), eta("f3^2*f9^2/f18")),
        (("ext", 27, 2), eta("f1^2*f3^2/f6")),
        (("ext", 27, 2), eta("f1^8/f2^3")),
    ]


def _chain_11():
    return _whole(3) + [
        (("comp", 1, 0, 0), eta("f6^3/f3^3") * D(9) * D(9) / D(3)),
        (("comp", 1, 0, 0), eta("f6^4*f9^4/(f3^5*f18^2)")),
        (("ext", 3, 0), eta("f2^4*f3^4/(f1^5*f6^2)")),
        (("ext", 3, 0), eta("f3^3/f6") * eta("f2/f1^2")),
        (("comp", 3, 0, 1), eta("f3^3/f6", 2, 1) * D(9) * Y(3) / D(3)),
        (("ext", 9, 3), eta("f1^2*f3*f6/f2", 2)),
        (("ext", 9, 3), eta("f3^2", 2) * eta("f2^2/f1")),
        (("comp", 1, 0, 1), eta("f6^3/f3^3", 2, 1) * D(9) * Y(3) / D(3)),
        (("comp", 1, 0, 1), eta("f6^3*f9*f18/f3^4", 2, 1)),
        (("ext", 3, 1), eta("f2^3*f3*f6/f1^4", 2)),
        (("ext", 3, 1), eta("f2^6/f1", 2)),
        (("comp", 9, 3, 1), eta("f3^2", 2) * eta("f18^2/f9", 1, 1)),
        (("comp", 9, 3, 1), eta("f3^2*f18^2/f9", 2, 1)),
        (("ext", 27, 12), eta("f1^2*f6^2/f3", 2)),
        (("ext", 27, 12), eta("f2^6/f1", 2)),
    ]


def _chain_14():
    return _whole(4) + [
        (("comp", 1, 0, 1), eta("f6^4/f3^4", 2, 1) * D(9) * Y(3) / D(3)),
        (("comp", 1, 0, 1), eta("f6^4*f9*f18/f3^5", 2, 1)),
        (("ext", 3, 1), eta("f2^4*f3*f6/f1^5", 2)),
        (("ext", 3, 1), eta("f6^2", 2) * eta("f2/f1^2")),
        (("comp", 3, 1, 1), eta("f6^2", 2) * Monomial(2, 1) * D(9) * Y(3) / D(3)),
        (("ext", 9, 4), eta("f3*f6") * eta("f2^2/f1")),
        (("comp", 1, 0, 0), eta("f6^4/f3^4") * D(9) * D(9) / D(3)),
        (("comp", 1, 0, 0), eta("f6^5*f9^4/(f3^6*f18^2)")),
        (("ext", 3, 0), eta("f2^5*f3^4/(f1^6*f6^2)")),
        (("ext", 3, 0), eta("f1^6/f2")),
        (("comp", 9, 4, 0), eta("f3*f6") * eta("f6*f9^2/(f3*f18)")),
        (("comp", 9, 4, 0), eta("f6^2*f9^2/f18")),
        (("ext", 27, 4), eta("f2^2*f3^2/f6")),
        (("ext", 27, 4), eta("f1^6/f2")),
    ]


def _chain_17():
    return _whole(5) + [
        (("comp", 1, 0, 2), eta("f6^5/f3^5", 1, 2) * Y(3) * Y(3) / D(3)),
        (("comp", 1, 0, 2), eta("f6^4*f18^4/(f3^5*f9^2)", 1, 2)),
        (("ext", 3, 2), eta("f2^4*f6^4/(f1^5*f3^2)")),
        (("ext", 3, 2), eta("f6^5/f3^3") * eta("f2/f1^2")),
        (("comp", 3, 2, 1), eta("f6^5/f3^3", 2, 1) * D(9) * Y(3) / D(3)),
        (("ext", 9, 5), eta("f6^2", 2) * eta("f2^2/f1")),
        (("comp", 1, 0, 1), eta("f6^5/f3^5", 2, 1) * D(9) * Y(3) / D(3)),
        (("comp", 1, 0, 1), eta("f6^5*f9*f18/f3^6", 2, 1)),
        (("ext", 3, 1), eta("f2^8/f1^3", 2)),
        (("comp", 9, 5, 1), eta("f6^2", 2) * eta("f18^2/f9", 1, 1)),
        (("ext", 27, 14), eta("f2^2*f6^2/f3", 2)),
        (("ext", 27, 14), eta("f2^8/f1^3", 2)),
    ]


def _chain_20():
    return _whole(6) + [
        (("comp", 1, 0, 0), eta("f6^6/f3^6") * D(9) * D(9) / D(3)),
        (("comp", 1, 0, 0), eta("f6^7*f9^4/(f3^8*f18^2)")),
        (("ext", 3, 0), eta("f2^7*f3^4/(f1^8*f6^2)")),
        (("ext", 3, 0), eta("f3^2") * eta("f2/f1^2")),
        (("comp", 3, 0, 2), eta("f3^2", 1, 2) * Y(3) * Y(3) / D(3)),
        (("ext", 9, 6), eta("f6^3/f3") * eta("f2^2/f1")),
        (("ext", 3, 0), eta("f1^4*f2")),
        (("comp", 9, 6, 0), eta("f6^3/f3") * eta("f6*f9^2/(f3*f18)")),
        (("comp", 9, 6, 0), eta("f6^4*f9^2/(f3^2*f18)")),
        (("ext", 27, 6), eta("f2^4*f3^2/(f1^2*f6)")),
        (("ext", 27, 6), eta("f1^4*f2")),
    ]


def _chain_23():
    return _whole(7) + [
        (("comp", 1, 0, 1), eta("f6^7/f3^7", 2, 1) * D(9) * Y(3) / D(3)),
        (("comp", 1, 0, 1), eta("f6^7*f9*f18/f3^8", 2, 1)),
        (("ext", 3, 1), eta("f2^7*f3*f6/f1^8", 2)),
        (("ext", 3, 1), eta("f6^3/f3", 2) * eta("f2/f1^2")),
        (("comp", 3, 1, 2), eta("f6^3/f3", 2, 2) * Y(3) * Y(3) / D(3)),
        (("ext", 9, 7), eta("f6^4/f3^2", 2) * eta("f2^2/f1")),
        (("ext", 3, 1), eta("f2^10/f1^5", 2)),
        (("comp", 9, 7, 1), eta("f6^4/f3^2", 2) * eta("f18^2/f9", 1, 1)),
        (("ext", 27, 16), eta("f2^4*f6^2/(f1^2*f3)", 2)),
        (("ext", 27, 16), eta("f2^10/f1^5", 2)),
    ]


def _chain_26():
    return _whole(8) + [
        (("comp", 1, 0, 2), eta("f6^8/f3^8", 1, 2) * Y(3) * Y(3) / D(3)),
        (("comp", 1, 0, 2), eta("f6^7*f18^4/(f3^8*f9^2)", 1, 2)),
        (("ext", 3, 2), eta("f2^7*f6^4/(f1^8*f3^2)")),
        (("ext", 3, 2), eta("f6^6/f3^4") * eta("f2/f1^2")),
        (("comp", 3, 2, 2), eta("f6^6/f3^4", 1, 2) * Y(3) * Y(3) / D(3)),
        (("ext", 9, 8), eta("f6^5/f3^3") * eta("f2^2/f1")),
        (("comp", 1, 0, 0), eta("f6^8/f3^8") * D(9) * D(9) / D(3)),
        (("comp", 1, 0, 0), eta("f6^9*f9^4/(f3^10*f18^2)")),
        (("ext", 3, 0), eta("f2^9*f3^4/(f1^10*f6^2)")),
        (("ext", 3, 0), eta("f1^2*f2^3")),
        (("comp", 9, 8, 0), eta("f6^5/f3^3") * eta("f6*f9^2/(f3*f18)")),
        (("ext", 27, 8), eta("f2^6*f3^2/(f1^4*f6)")),
        (("ext", 27, 8), eta("f1^2*f2^3")),
    ]


MOD3_CHAINS = {
    5: _chain_5,
    8: _chain_8,
    11: _chain_11,
    14: _chain_14,
    17: _chain_17,
    20: _chain_20,
    23: _chain_23,
    26: _chain_26,
}


def build_registry(order: int = DEFAULT_ORDER, param_bounds=None) -> Registry:
    return Registry(order, param_bounds)


def _spec_fields(text):
    fields = {}
    for token in text.split():
        name, sep, value = token.partition("=")
        if not sep or not value:
            raise ConfigurationError(f"malformed check field {token!r} (expected name=value)")
        fields[name] = value
    return fields


def _spec_int(fields, name):
    try:
        return int(fields[name])
    except KeyError:
        raise ConfigurationError(f"check spec is missing {name}=") from None
    except ValueError:
        raise ConfigurationError(f"{name}={fields[name]!r} is not an integer") from None


def _spec_pair(fields, name):
    try:
        stride, offset = (int(part) for part in fields[name].split(","))
    except KeyError:
        raise ConfigurationError(f"check spec is missing {name}=") from None
    except ValueError:
        raise ConfigurationError(f"{name}={fields[name]!r} is not a pair A,B") from None
    return stride, offset


def parse_check_spec(text: str):
    """'ak=5 A=5 B=3 mod=5' or 'internal ak=5 lhs=27,10 rhs=3,1 mod=3' -> a registry-style entry."""
    text = text.strip()
    internal = text.startswith("internal ")
    fields = _spec_fields(text[len("internal "):] if internal else text)
    k = _spec_int(fields, "ak")
    if k < 1:
        raise ConfigurationError(f"ak={k} must be positive")
    modulus = _spec_int(fields, "mod")
    if internal:
        expected = {"ak", "lhs", "rhs", "mod"}
    else:
        expected = {"ak", "A", "B", "mod"}
    unknown = set(fields) - expected
    if unknown:
        raise ConfigurationError(f"unknown check fields: {', '.join(sorted(unknown))}")
    if internal:
        lhs, rhs = _spec_pair(fields, "lhs"), _spec_pair(fields, "rhs")
        check_id = f"a{k}({lhs[0]}n+{lhs[1]})=a{k}({rhs[0]}n+{rhs[1]})_mod{modulus}"
        return InternalCongruence(check_id, ColoredSource(k), modulus, lhs, rhs)
    stride, offset = _spec_int(fields, "A"), _spec_int(fields, "B")
    return CongruenceFamily(f"a{k}({stride}n+{offset})_mod{modulus}", ColoredSource(k), stride, offset, modulus)
