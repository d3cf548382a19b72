# -*- coding: utf-8 -*-
"""
G-TSF 演算的异常层次。

所有异常都继承自 `GTSFError`，并在消息之外携带结构化属性，
方便命令层映射退出码、测试直接断言。
"""

from typing import Any, Optional


class GTSFError(Exception):
    """所有 G-TSF 错误的基类。"""


# ==================================
# 校验错误
# ==================================


class ValidationFailure(GTSFError):
    """值不满足约束时抛出的错误基类。"""

    def __init__(self, message: str, *, path: Optional[str] = None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class ComponentOutOfRange(ValidationFailure):
    """某个隶属度分量不在 [0, 1] 内。"""

    def __init__(
        self, component: str, value: float, power_sum: float, *, path: Optional[str] = None
    ):
        self.component = component
        self.value = value
        self.power_sum = power_sum
        super().__init__(
            f"分量 {component}={value!r} 超出 [0, 1]（幂和 {power_sum:.6g}）", path=path
        )


class ConstraintViolated(ValidationFailure):
    """幂和 φ^t + χ^t + ψ^t 超过 1 + ε。"""

    def __init__(
        self, value: Any, power_sum: float, t: int, *, path: Optional[str] = None
    ):
        self.value = value
        self.power_sum = power_sum
        self.t = t
        super().__init__(
            f"{value} 在 t={t} 下的幂和为 {power_sum:.6g}，超过 1", path=path
        )


class NonZeroIndeterminacy(ValidationFailure):
    """参数要求 χ = 0（圆形毕达哥拉斯 / 直觉模糊特例），但值的 χ 不为 0。"""

    def __init__(self, chi: float, *, path: Optional[str] = None):
        self.chi = chi
        super().__init__(f"该参数下 χ 必须为 0，收到 {chi!r}", path=path)


class RadiusOutOfRange(ValidationFailure):
    """半径不在 [0, 1] 内。"""

    def __init__(self, radius: float, *, path: Optional[str] = None):
        self.radius = radius
        super().__init__(f"半径 r={radius!r} 超出 [0, 1]", path=path)


class ProblemValidationError(ValidationFailure):
    """决策问题中某个单元格的评价未通过校验，`cause` 为原始错误。"""

    def __init__(self, path: str, cause: ValidationFailure):
        self.cause = cause
        self.cell = path
        super().__init__(str(cause), path=path)


# ==================================
# 结构错误
# ==================================


class EmptyFamily(GTSFError):
    """TSFV 族为空，无法求中心点或半径。"""


class EmptyUniverse(GTSFError):
    """论域为空，归一化距离或相似度无定义。"""


class UniverseMismatch(GTSFError):
    """两个 G-TSF 集合的论域标签不一致。"""

    def __init__(self, left: tuple[str, ...], right: tuple[str, ...]):
        self.left = left
        self.right = right
        super().__init__(f"论域不一致：{list(left)} 与 {list(right)}")


class DegenerateValue(GTSFError):
    """中心点为 (0, 0, 0)，余弦项 0/0 无定义。"""

    def __init__(self, message: str, *, context: Optional[str] = None):
        self.context = context
        if context:
            message = f"{context}: {message}"
        super().__init__(message)


class LengthMismatch(GTSFError):
    """待聚合的值与权重数量不一致。"""


class InvalidWeights(GTSFError):
    """权重非正或总和不为 1。"""


# ==================================
# 文档错误
# ==================================


class DocumentError(GTSFError):
    """输入文档错误的基类。"""


class ParseError(DocumentError):
    """文档语法错误（JSON / CSV 无法解析）。"""


class SchemaError(DocumentError):
    """字段缺失、多余或类型不符。"""

    def __init__(self, message: str, *, path: Optional[str] = None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)
