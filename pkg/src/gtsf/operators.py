# -*- coding: utf-8 -*-
"""
G-TSF 集合的集合运算，以及 G-TSF 值的代数运算和数乘律。

并与交都对 χ 取 min。
"""

import enum
import math
from typing import Callable, Union

from src.config import EQUALITY_TOLERANCE
from src.gtsf.core import GTSFSet, GTSFValue, Params, TSFValue, is_valid_tsfv, validate_gtsfv
from src.gtsf.errors import UniverseMismatch


class RadiusRule(enum.Enum):
    MIN = "min"
    MAX = "max"

    def apply(self, r: float, s: float) -> float:
        return min(r, s) if self is RadiusRule.MIN else max(r, s)


RuleLike = Union[RadiusRule, str]


def _rule(rule: RuleLike) -> RadiusRule:
    return rule if isinstance(rule, RadiusRule) else RadiusRule(rule)


def _check_universe(a: GTSFSet, b: GTSFSet) -> None:
    if a.labels != b.labels:
        raise UniverseMismatch(a.labels, b.labels)


def _zip_sets(
    a: GTSFSet, b: GTSFSet, fn: Callable[[GTSFValue, GTSFValue], GTSFValue]
) -> GTSFSet:
    _check_universe(a, b)
    return GTSFSet({x: fn(a[x], b[x]) for x in a.labels})


# ===================================================================================
# 集合运算
# ===================================================================================


def subset(a: GTSFSet, b: GTSFSet) -> bool:
    """
    a ⊆ b：r_a ≤ r_b，φ_a ≤ φ_b，χ_a ≥ χ_b，ψ_a ≥ ψ_b（非严格，自反）。

    χ 与 ψ 同向比较。
    """
    _check_universe(a, b)
    return all(
        a[x].radius <= b[x].radius
        and a[x].phi <= b[x].phi
        and a[x].chi >= b[x].chi
        and a[x].psi >= b[x].psi
        for x in a.labels
    )


def _close(u: float, v: float) -> bool:
    return math.isclose(u, v, rel_tol=0.0, abs_tol=EQUALITY_TOLERANCE)


def equal(a: GTSFSet, b: GTSFSet) -> bool:
    """四个分量逐元素相等（容差 1e-9）。"""
    _check_universe(a, b)
    return all(
        _close(a[x].phi, b[x].phi)
        and _close(a[x].chi, b[x].chi)
        and _close(a[x].psi, b[x].psi)
        and _close(a[x].radius, b[x].radius)
        for x in a.labels
    )


def complement(a: GTSFSet) -> GTSFSet:
    """逐元素交换 φ 与 ψ，χ 和 r 不变。"""
    return a.map(lambda v: v.swapped())


def union(a: GTSFSet, b: GTSFSet, radius_rule: RuleLike = RadiusRule.MIN) -> GTSFSet:
    """⟨max φ, min χ, min ψ; rule(r, s)⟩。"""
    rule = _rule(radius_rule)
    return _zip_sets(
        a,
        b,
        lambda u, v: GTSFValue.of(
            max(u.phi, v.phi),
            min(u.chi, v.chi),
            min(u.psi, v.psi),
            rule.apply(u.radius, v.radius),
        ),
    )


def intersection(
    a: GTSFSet, b: GTSFSet, radius_rule: RuleLike = RadiusRule.MIN
) -> GTSFSet:
    """⟨min φ, min χ, max ψ; rule(r, s)⟩。"""
    rule = _rule(radius_rule)
    return _zip_sets(
        a,
        b,
        lambda u, v: GTSFValue.of(
            min(u.phi, v.phi),
            min(u.chi, v.chi),
            max(u.psi, v.psi),
            rule.apply(u.radius, v.radius),
        ),
    )


# ===================================================================================
# 代数运算
# ===================================================================================


def _probabilistic_sum(x: float, y: float, t: int) -> float:
    """(xᵗ + yᵗ − xᵗyᵗ)^{1/t}"""
    xt, yt = x**t, y**t
    return (xt + yt - xt * yt) ** (1.0 / t)


def _check_operands(p: Params, **operands: GTSFValue) -> None:
    for name, v in operands.items():
        validate_gtsfv(v, p, path=name)


def _result(center: TSFValue, radius: float, p: Params) -> GTSFValue:
    return GTSFValue(center, radius, normal=is_valid_tsfv(center, p))


def add(
    a: GTSFValue, b: GTSFValue, p: Params, radius_rule: RuleLike = RadiusRule.MIN
) -> GTSFValue:
    """a ⊕ b，两个操作数都须在 p 下合法。"""
    _check_operands(p, a=a, b=b)
    rule = _rule(radius_rule)
    center = TSFValue(
        _probabilistic_sum(a.phi, b.phi, p.t), a.chi * b.chi, a.psi * b.psi
    )
    return _result(center, rule.apply(a.radius, b.radius), p)


def mul(
    a: GTSFValue, b: GTSFValue, p: Params, radius_rule: RuleLike = RadiusRule.MIN
) -> GTSFValue:
    """a ⊗ b，与 ⊕ 在 φ↔ψ 交换下对偶。"""
    _check_operands(p, a=a, b=b)
    rule = _rule(radius_rule)
    center = TSFValue(
        a.phi * b.phi, a.chi * b.chi, _probabilistic_sum(a.psi, b.psi, p.t)
    )
    return _result(center, rule.apply(a.radius, b.radius), p)


def _scaled_complement(x: float, w: float, t: int) -> float:
    """(1 − (1 − xᵗ)^w)^{1/t}"""
    return (1.0 - (1.0 - x**t) ** w) ** (1.0 / t)


def scalar_mul(w: float, a: GTSFValue, p: Params) -> GTSFValue:
    """
    w·a = ⟨(1 − (1−φᵗ)^w)^{1/t}, χ^w, ψ^w; r^w⟩。

    w = 0 时结果为 ⟨0, 1, 1; 1⟩，离开约束区域，标记为非正规值。
    """
    if w < 0:
        raise ValueError(f"数乘系数必须非负，收到 {w}")
    _check_operands(p, a=a)
    center = TSFValue(_scaled_complement(a.phi, w, p.t), a.chi**w, a.psi**w)
    return _result(center, a.radius**w, p)


def scalar_pow(a: GTSFValue, w: float, p: Params) -> GTSFValue:
    """a^w = ⟨φ^w, χ^w, (1 − (1−ψᵗ)^w)^{1/t}; r^w⟩。"""
    if w < 0:
        raise ValueError(f"幂指数必须非负，收到 {w}")
    _check_operands(p, a=a)
    center = TSFValue(a.phi**w, a.chi**w, _scaled_complement(a.psi, w, p.t))
    return _result(center, a.radius**w, p)
