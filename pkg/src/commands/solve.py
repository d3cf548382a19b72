# -*- coding: utf-8 -*-
import argparse

from src.commands._common import (
    Command,
    add_document_arg,
    add_param_flags,
    overrides_from,
    weights_arg,
)
from src.utils.formatting import emit_report


class SolveCommand(Command):
    """完整流水线：专家评价 -> G-TSF 决策矩阵 -> 与理想方案的相似度 -> 排序。"""

    name = "solve"
    help = "求解多准则群决策问题并输出排序"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_document_arg(parser)
        add_param_flags(parser, exponents=True)
        parser.add_argument(
            "--weights",
            type=weights_arg,
            default=None,
            help="逗号分隔的准则权重（扩展功能，默认等权）",
        )

    def run(self, args: argparse.Namespace) -> str:
        outcome = self.app.decision_service.solve(
            args.document, overrides_from(args), args.weights
        )
        return emit_report(outcome.report, outcome.matrix, args.format)


def setup(app):
    """将这个命令注册到应用中。"""
    app.add_command(SolveCommand(app))
