# -*- coding: utf-8 -*-
import argparse

from src.commands._common import Command, add_document_arg, add_param_flags, overrides_from
from src.utils.formatting import emit_report, emit_rows


class SimilarityCommand(Command):
    name = "similarity"
    help = "计算 G-TSF 值之间的余弦相似度，或按理想方案相似度排序"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_document_arg(parser)
        parser.add_argument("--left", default=None, help="左侧集合名（默认第一个）")
        parser.add_argument("--right", default=None, help="右侧集合名（默认第二个）")
        parser.add_argument(
            "--ideal",
            action="store_true",
            help="把每个集合视为一个方案，计算与理想方案 <1,0,0;1> 的相似度并排序",
        )
        add_param_flags(parser)

    def run(self, args: argparse.Namespace) -> str:
        service = self.app.measure_service
        if args.ideal:
            matrix, report = service.ideal_ranking(args.document, overrides_from(args))
            return emit_report(report, matrix, args.format)
        rows = service.similarity(args.document, args.left, args.right, overrides_from(args))
        return emit_rows("逐元素余弦相似度", rows, args.format)


def setup(app):
    app.add_command(SimilarityCommand(app))
