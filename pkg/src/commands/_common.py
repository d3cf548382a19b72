# -*- coding: utf-8 -*-
"""
各子命令共用的参数定义与辅助函数。
"""

import argparse
from typing import TYPE_CHECKING

from src.gtsf.aggregate import WeightVector
from src.gtsf.errors import InvalidWeights
from src.services.base import ParamOverrides
from src.utils.formatting import FORMATS

if TYPE_CHECKING:
    from main import GTSFApp


class Command:
    """
    子命令的基类。

    子类设置 `name` / `help`，在 `configure` 中声明自己的参数，
    在 `run` 中调用服务层并返回要写到标准输出的文本。
    """

    name: str = ""
    help: str = ""

    def __init__(self, app: "GTSFApp"):
        self.app = app

    def configure(self, parser: argparse.ArgumentParser) -> None:
        pass

    def run(self, args: argparse.Namespace) -> str:
        raise NotImplementedError


def weights_arg(text: str) -> WeightVector:
    """argparse 类型函数：'0.2,0.3,0.5' -> WeightVector。"""
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
        return WeightVector(values)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"权重必须是逗号分隔的数字: {text}") from e
    except InvalidWeights as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def add_document_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "document",
        help='文档路径；"-" 读取标准输入；"fixture:名称" 使用内置样例',
    )


def add_param_flags(parser: argparse.ArgumentParser, *, exponents: bool = False) -> None:
    """--t / --sigma / --format，以及（可选）构造用的 --avg-t / --radius-t / 中心点舍入。"""
    parser.add_argument("--t", type=int, default=None, help="约束、得分、距离与相似度的指数 t")
    parser.add_argument("--sigma", type=float, default=None, help="得分函数的态度权重 σ ∈ [0,1]")
    if exponents:
        parser.add_argument(
            "--avg-t", dest="avg_t", type=int, default=None, help="中心点幂平均的指数"
        )
        parser.add_argument(
            "--radius-t", dest="radius_t", type=int, default=None, help="半径计算的指数"
        )
        rounding = parser.add_mutually_exclusive_group()
        rounding.add_argument(
            "--center-decimals",
            dest="center_decimals",
            type=int,
            default=None,
            help="量半径前把中心点舍入到的小数位数",
        )
        rounding.add_argument(
            "--exact-centers",
            dest="exact_centers",
            action="store_true",
            help="不舍入中心点，忽略文档中的 center_decimals",
        )
    parser.add_argument("--format", choices=FORMATS, default="table", help="输出格式")


def overrides_from(args: argparse.Namespace) -> ParamOverrides:
    return ParamOverrides(
        t=args.t,
        avg_t=getattr(args, "avg_t", None),
        radius_t=getattr(args, "radius_t", None),
        sigma=args.sigma,
        center_decimals=getattr(args, "center_decimals", None),
        exact_centers=getattr(args, "exact_centers", False),
    )
