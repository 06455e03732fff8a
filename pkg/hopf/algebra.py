import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from sympy.polys.domains.domain import Domain

from exactla import (
    Field,
    Matrix,
    identity,
    inverse,
    kron,
    kron_all,
    matmul,
    permute_factors,
    scalar_matrix,
)
from utils.errors import NoRForm, NotInvertible, ShapeMismatch, Singular, SingularAntipode
from utils.report import VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    """Finite-dimensional Hopf algebra given by structure constants"""
    field: Field
    dim: int
    mult: Matrix          # h × h²
    unit: Matrix          # h × 1
    comult: Matrix        # h² × h
    counit: Matrix        # 1 × h
    antipode: Matrix      # h × h
    rform: Optional[Matrix] = None        # 1 × h²
    ribbon_form: Optional[Matrix] = None  # 1 × h
    name: str = "H"
    basis: tuple[str, ...] = field(default=())

    def __post_init__(self):
        h = self.dim
        expected = {
            "mult": (h, h * h),
            "unit": (h, 1),
            "comult": (h * h, h),
            "counit": (1, h),
            "antipode": (h, h),
        }
        for attr, want in expected.items():
            got = getattr(self, attr).shape
            if got != want:
                raise ShapeMismatch(f"{self.name}.{attr} has shape {got}, expected {want}")
        if self.rform is not None and self.rform.shape != (1, h * h):
            raise ShapeMismatch(f"{self.name}.rform has shape {self.rform.shape}")
        if self.ribbon_form is not None and self.ribbon_form.shape != (1, h):
            raise ShapeMismatch(f"{self.name}.ribbon_form has shape {self.ribbon_form.shape}")

    @property
    def domain(self) -> Domain:
        return self.field.domain

    def identity(self) -> Matrix:
        return identity(self.dim, self.domain)

    def require_rform(self) -> Matrix:
        if self.rform is None:
            raise NoRForm(f"{self.name} carries no r-form")
        return self.rform

    def with_rform(self, rform: Optional[Matrix]) -> "HopfAlgebra":
        return HopfAlgebra(self.field, self.dim, self.mult, self.unit, self.comult, self.counit,
                           self.antipode, rform, self.ribbon_form, self.name, self.basis)

    def with_antipode(self, antipode: Matrix) -> "HopfAlgebra":
        return HopfAlgebra(self.field, self.dim, self.mult, self.unit, self.comult, self.counit,
                           antipode, self.rform, self.ribbon_form, self.name, self.basis)

    def same_as(self, other: "HopfAlgebra") -> bool:
        if self is other:
            return True
        return (
            self.field == other.field
            and self.dim == other.dim
            and all(getattr(self, a).to_list() == getattr(other, a).to_list()
                    for a in ("mult", "unit", "comult", "counit", "antipode"))
        )


def middle_swap(h: int, K: Domain) -> Matrix:
    """a⊗b⊗c⊗d ↦ a⊗c⊗b⊗d on H^{⊗4}"""
    return permute_factors([h, h, h, h], [0, 2, 1, 3], K=K)


def check_hopf(H: HopfAlgebra) -> VerificationReport:
    report = VerificationReport()
    K = H.domain
    h = H.dim
    I = H.identity()
    mu, eta, delta, eps, S = H.mult, H.unit, H.comult, H.counit, H.antipode
    one = scalar_matrix(K.one, K)

    report.compare("associativity", matmul(mu, kron(mu, I)), matmul(mu, kron(I, mu)))
    report.compare("left-unit", matmul(mu, kron(eta, I)), I)
    report.compare("right-unit", matmul(mu, kron(I, eta)), I)
    report.compare("coassociativity", matmul(kron(delta, I), delta), matmul(kron(I, delta), delta))
    report.compare("left-counit", matmul(kron(eps, I), delta), I)
    report.compare("right-counit", matmul(kron(I, eps), delta), I)
    report.compare(
        "comult-multiplicative",
        matmul(delta, mu),
        matmul(kron(mu, mu), matmul(middle_swap(h, K), kron(delta, delta))),
    )
    report.compare("counit-multiplicative", matmul(eps, mu), kron(eps, eps))
    report.compare("comult-unit", matmul(delta, eta), kron(eta, eta))
    report.compare("counit-unit", matmul(eps, eta), one)
    unit_counit = matmul(eta, eps)
    report.compare("antipode-left", matmul(mu, matmul(kron(S, I), delta)), unit_counit)
    report.compare("antipode-right", matmul(mu, matmul(kron(I, S), delta)), unit_counit)
    return report


def antipode_inverse(H: HopfAlgebra) -> Matrix:
    try:
        return inverse(H.antipode)
    except Singular as exc:
        raise SingularAntipode(f"antipode of {H.name} is not invertible") from exc


def pair_comult(H: HopfAlgebra) -> Matrix:
    """Δ on H⊗H: a⊗b ↦ (a₁⊗b₁)⊗(a₂⊗b₂)"""
    return tensor_power(H, 2).comult


def convolution_matrix(H: HopfAlgebra, rho: Matrix) -> Matrix:
    """M with (ρ * σ) = σ·M for forms σ on H⊗H"""
    h2 = H.dim * H.dim
    return matmul(kron(rho, identity(h2, H.domain)), pair_comult(H))


def rform_inverse(H: HopfAlgebra, rho: Optional[Matrix] = None) -> Matrix:
    """Convolution inverse ρ̄ of a bilinear form on H⊗H"""
    if rho is None:
        return _own_rform_inverse(H)
    return _convolution_inverse(H, rho)


@lru_cache(maxsize=32)
def _own_rform_inverse(H: HopfAlgebra) -> Matrix:
    return _convolution_inverse(H, H.require_rform())


def _convolution_inverse(H: HopfAlgebra, rho: Matrix) -> Matrix:
    try:
        m_inv = inverse(convolution_matrix(H, rho))
    except Singular as exc:
        raise NotInvertible("r-form has no convolution inverse") from exc
    return matmul(kron(H.counit, H.counit), m_inv)


def check_cqt(H: HopfAlgebra, rho: Optional[Matrix] = None) -> VerificationReport:
    """Axioms of a universal r-form ρ: H⊗H → k"""
    rho = H.require_rform() if rho is None else rho
    if rho.shape != (1, H.dim * H.dim):
        raise ShapeMismatch(f"r-form has shape {rho.shape}")
    report = VerificationReport()
    K = H.domain
    h = H.dim
    I = H.identity()
    mu, delta = H.mult, H.comult
    eps2 = kron(H.counit, H.counit)
    d2 = pair_comult(H)

    try:
        rho_bar = rform_inverse(H, rho)
    except NotInvertible:
        report.record("cqt-invertible", False, "convolution inverse does not exist")
        return report
    report.compare("cqt-invertible", matmul(kron(rho, rho_bar), d2), eps2)
    report.compare("cqt-invertible-left", matmul(kron(rho_bar, rho), d2), eps2)

    # r(ab⊗c) = r(a⊗c₁) r(b⊗c₂)
    lhs = matmul(rho, kron(mu, I))
    rhs = matmul(kron(rho, rho), permute_factors([h] * 4, [0, 2, 1, 3], kron(kron(I, I), delta)))
    report.compare("cqt-multiplicative-left", lhs, rhs)

    # r(a⊗bc) = r(a₁⊗c) r(a₂⊗b)
    lhs = matmul(rho, kron(I, mu))
    rhs = matmul(kron(rho, rho), permute_factors([h] * 4, [0, 3, 1, 2], kron(delta, kron(I, I))))
    report.compare("cqt-multiplicative-right", lhs, rhs)

    # b₁a₁ r(a₂⊗b₂) = r(a₁⊗b₁) a₂b₂
    lhs = matmul(kron(mu, rho), permute_factors([h] * 4, [1, 0, 2, 3], d2))
    rhs = matmul(kron(rho, mu), d2)
    report.compare("cqt-commutation", lhs, rhs)

    report.compare("cqt-unit-left", matmul(rho, kron(H.unit, I)), H.counit)
    report.compare("cqt-unit-right", matmul(rho, kron(I, H.unit)), H.counit)
    logger.debug(f"checked r-form on {H.name} over {H.field}")
    return report


def _interleave(n: int) -> list[int]:
    """(a₁..aₙ, b₁..bₙ) ↦ (a₁, b₁, a₂, b₂, ...)"""
    order = []
    for i in range(n):
        order += [i, n + i]
    return order


def _deinterleave(n: int) -> list[int]:
    """(a₁', a₁'', ..., aₙ', aₙ'') ↦ (a₁'..aₙ', a₁''..aₙ'')"""
    return [2 * k for k in range(n)] + [2 * k + 1 for k in range(n)]


@lru_cache(maxsize=64)
def tensor_power(H: HopfAlgebra, n: int) -> HopfAlgebra:
    """H^{⊗n} with factorwise structure; n = 0 gives the ground field"""
    K = H.domain
    if n == 0:
        one = identity(1, K)
        return HopfAlgebra(H.field, 1, one, one, one, one, one, one, one, name=f"{H.name}^0")
    if n == 1:
        return H
    h = H.dim
    mult = matmul(kron_all([H.mult] * n, K), permute_factors([h] * (2 * n), _interleave(n), K=K))
    comult = permute_factors([h] * (2 * n), _deinterleave(n), kron_all([H.comult] * n, K))
    rform = None
    if H.rform is not None:
        rform = matmul(kron_all([H.rform] * n, K), permute_factors([h] * (2 * n), _interleave(n), K=K))
    ribbon = kron_all([H.ribbon_form] * n, K) if H.ribbon_form is not None else None
    return HopfAlgebra(
        field=H.field,
        dim=h ** n,
        mult=mult,
        unit=kron_all([H.unit] * n, K),
        comult=comult,
        counit=kron_all([H.counit] * n, K),
        antipode=kron_all([H.antipode] * n, K),
        rform=rform,
        ribbon_form=ribbon,
        name=f"{H.name}^{n}",
    )


def unit_power(H: HopfAlgebra, n: int) -> Matrix:
    """1 ∈ H^{⊗n} as an hⁿ×1 column"""
    return kron_all([H.unit] * n, H.domain)


def counit_power(H: HopfAlgebra, n: int) -> Matrix:
    return kron_all([H.counit] * n, H.domain)
