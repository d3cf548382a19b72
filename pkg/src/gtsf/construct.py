# -*- coding: utf-8 -*-
"""
由一族 TSFV 构造 G-TSF 值：幂平均中心点与截断到 1 的最大距离半径。
"""

import logging
from typing import Mapping, Optional, Sequence

import numpy as np

from src.gtsf.core import GTSFSet, GTSFValue, Params, TSFValue, is_valid_tsfv, validate_tsfv
from src.gtsf.errors import EmptyFamily

logger = logging.getLogger(__name__)

TSFVFamily = Sequence[TSFValue]


def _as_array(family: TSFVFamily) -> np.ndarray:
    if len(family) == 0:
        raise EmptyFamily("TSFV 族为空")
    return np.array([m.grades() for m in family], dtype=float)


def _check_members(family: TSFVFamily, p: Params, label: str = "family") -> None:
    for j, member in enumerate(family):
        validate_tsfv(member, p, path=f"{label}[{j}]")


def centroid(family: TSFVFamily, p: Params) -> TSFValue:
    """
    各分量的 t 次幂平均 ⟨(Σφⱼᵗ/n)^{1/t}, …⟩，t 取 `p.averaging_exponent`。
    """
    grades = _as_array(family)
    _check_members(family, p)
    if len(family) == 1:
        return family[0]
    t = p.averaging_exponent
    mean = np.mean(grades**t, axis=0) ** (1.0 / t)
    return TSFValue(*(float(x) for x in mean))


def radius(
    family: TSFVFamily, p: Params, center: Optional[TSFValue] = None
) -> float:
    """
    中心点到族内成员在 t 次幂坐标下的最大欧氏距离，截断到 1。

    t 取 `p.radius_exponent`。未给出 center 时，幂坐标下的中心就是
    各成员 t 次幂的均值；给出时使用 center 的 t 次幂。
    """
    grades = _as_array(family)
    t = p.radius_exponent
    powers = grades**t
    if center is None:
        anchor = powers.mean(axis=0)
    else:
        anchor = np.array(center.grades(), dtype=float) ** t
    distances = np.sqrt(((powers - anchor) ** 2).sum(axis=1))
    farthest = float(distances.max())
    if farthest > 1.0:
        logger.debug(f"最大距离 {farthest:.4f} 超过 1，截断为 1")
    return min(farthest, 1.0)


def rounded_center(center: TSFValue, decimals: Optional[int]) -> TSFValue:
    """把中心点各分量四舍五入到 decimals 位；decimals 为 None 时原样返回。"""
    if decimals is None:
        return center
    return TSFValue(*(round(x, decimals) for x in center.grades()))


def make_gtsfv(family: TSFVFamily, p: Params) -> GTSFValue:
    """
    中心点与从该中心点量起的半径组合成 G-TSF 值。

    单成员族直接取该成员、半径为 0。设置了 `p.center_decimals` 时
    先舍入中心点；舍入后离开约束区域的结果标记为非正规值。
    """
    _check_members(family, p)
    if len(family) == 1:
        return GTSFValue(family[0], 0.0)
    center = rounded_center(centroid(family, p), p.center_decimals)
    normal = p.center_decimals is None or is_valid_tsfv(center, p)
    if not normal:
        logger.debug(f"舍入后的中心点 {center} 不满足约束")
    return GTSFValue(center, radius(family, p, center), normal=normal)


def make_gtsfs(families: Mapping[str, TSFVFamily], p: Params) -> GTSFSet:
    """按论域标签逐个构造，得到每个元素半径各异的 G-TSF 集合。"""
    for label, fam in families.items():
        _check_members(fam, p, label)
    return GTSFSet({label: make_gtsfv(fam, p) for label, fam in families.items()})
