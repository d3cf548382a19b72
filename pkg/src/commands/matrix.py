# -*- coding: utf-8 -*-
import argparse

from src.commands._common import Command, add_document_arg, add_param_flags, overrides_from
from src.utils.formatting import emit_matrix


class MatrixCommand(Command):
    name = "matrix"
    help = "只输出 G-TSF 决策矩阵"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_document_arg(parser)
        add_param_flags(parser, exponents=True)

    def run(self, args: argparse.Namespace) -> str:
        outcome = self.app.decision_service.matrix(args.document, overrides_from(args))
        return emit_matrix(outcome.matrix, args.format)


def setup(app):
    app.add_command(MatrixCommand(app))
