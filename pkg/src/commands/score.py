# -*- coding: utf-8 -*-
import argparse

from src.commands._common import Command, add_document_arg, add_param_flags, overrides_from
from src.utils.formatting import emit_rows


class ScoreCommand(Command):
    name = "score"
    help = "得分函数与精确函数，以及集合内按比较规则的名次"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_document_arg(parser)
        add_param_flags(parser)

    def run(self, args: argparse.Namespace) -> str:
        rows = self.app.measure_service.score(args.document, overrides_from(args))
        return emit_rows("得分与精确度", rows, args.format)


def setup(app):
    app.add_command(ScoreCommand(app))
