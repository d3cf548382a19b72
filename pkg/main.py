# -*- coding: utf-8 -*-
"""
命令行主入口文件。
"""

# --- 导入 ---
import argparse
import importlib
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from src.config import EXIT_INPUT_ERROR, EXIT_OK, EXIT_UNEXPECTED, EXIT_VALIDATION_ERROR
from src.documents.repositories.fixture import FixtureRepository
from src.gtsf.errors import DocumentError, GTSFError, ValidationFailure
from src.services.aggregation_service import AggregationService
from src.services.decision_service import DecisionService
from src.services.measure_service import MeasureService

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - [%(levelname)s] - %(name)s: %(message)s"


# --- 应用核心类 ---
class GTSFApp:
    """自定义应用类，用于封装服务、子命令与分发逻辑。"""

    def __init__(self, fixture_repo: Optional[FixtureRepository] = None):
        self.parser = argparse.ArgumentParser(
            prog="gtsf",
            description="球状 T-球面模糊 (G-TSF) 演算与多准则群决策工具。",
        )
        verbosity = self.parser.add_mutually_exclusive_group()
        verbosity.add_argument("-v", "--verbose", action="store_true", help="输出调试日志")
        verbosity.add_argument("-q", "--quiet", action="store_true", help="只输出警告与错误")
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="<command>")
        self.commands: dict = {}

        # --- 依赖注入 ---
        # 实例化仓库和所有服务，并将其附加到应用实例上
        self.fixture_repo = fixture_repo or FixtureRepository()
        self.decision_service = DecisionService(self.fixture_repo)
        self.measure_service = MeasureService(self.fixture_repo)
        self.aggregation_service = AggregationService(self.fixture_repo)

    def add_command(self, command) -> None:
        """注册一个子命令（由各命令模块的 setup 调用）。"""
        parser = self.subparsers.add_parser(
            command.name, help=command.help, description=command.__doc__ or command.help
        )
        command.configure(parser)
        self.commands[command.name] = command

    def load_commands(self) -> None:
        """动态加载 src/commands 下的所有命令模块。"""
        commands_path = Path(__file__).parent / "src" / "commands"
        for command_file in sorted(commands_path.glob("*.py")):
            if command_file.is_file() and not command_file.name.startswith("_"):
                module_name = f"src.commands.{command_file.stem}"
                module = importlib.import_module(module_name)
                module.setup(self)
                logger.debug(f"成功加载命令模块: {module_name}")

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """解析参数、分发到子命令，并把异常映射为退出码。"""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

        if args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)
        elif args.quiet:
            logging.getLogger().setLevel(logging.WARNING)

        if args.command is None:
            self.parser.print_help()
            return EXIT_INPUT_ERROR

        try:
            output = self.commands[args.command].run(args)
        except ValidationFailure as e:
            logger.error(f"约束校验失败: {e}")
            return EXIT_VALIDATION_ERROR
        except (DocumentError, ValidationError) as e:
            logger.error(f"输入错误: {e}")
            return EXIT_INPUT_ERROR
        except GTSFError as e:
            logger.error(f"计算无法进行: {e}")
            return EXIT_INPUT_ERROR
        except Exception as e:
            logger.critical(f"出现未捕获的异常: {e}", exc_info=e)
            return EXIT_UNEXPECTED

        print(output)
        return EXIT_OK


def create_app() -> GTSFApp:
    app = GTSFApp()
    app.load_commands()
    return app


# --- 应用程序主入口 ---
def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
    return create_app().run(argv)


# --- 运行主程序 ---
if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("检测到键盘中断，程序已终止。")
        sys.exit(EXIT_UNEXPECTED)
