"""
导子塔工作台 - 主程序
读取代数（文档或内置目录），输出结构分析、导子代数、导子塔和完备包报告
"""

import argparse
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from config_loader import get_config
from errors import InputError, InvariantViolation
from derivations import complete_hull, derivation_space
from formats import (
    CATALOG_PREFIX,
    build_report,
    render_report,
    random_solvable_extension,
    resolve_algebra,
    serialize_algebra,
)
from formats.random_algebras import EXTENSION_FAMILIES
from formats.report_document import REPORT_FORMATS, ReportDocument
from liecore.algebra import LieAlgebra
from structure import gamma_triple, mu_rep
from tasks import AnalysisTask, BatchProcessor, TaskQueue, exit_code_for
from tasks.batch_processor import EXIT_OK
from tower import tower_iterate
from tower.iteration import FAST_PATH_MODES
from utils import ensure_dir, setup_logger, setup_package_loggers

COMMANDS = ("analyze", "der", "tower", "hull")


class TowerWorkbench:
    """工作台主类：配置、日志与各子命令的实现"""

    def __init__(self, config_path: Optional[str] = None, log_level: Optional[str] = None):
        """
        初始化工作台

        Args:
            config_path: 配置文件路径，None 时使用默认配置
            log_level: 覆盖配置中的日志级别

        Raises:
            FileNotFoundError: 配置文件不存在
        """
        self.config = get_config(config_path)
        level = log_level or self.config.get('logging.level', 'INFO')
        setup_package_loggers(level)
        self.logger = setup_logger("lie_tower", level)

    def load(self, source: str) -> LieAlgebra:
        return resolve_algebra(source)

    def analyze(self, g: LieAlgebra) -> ReportDocument:
        """中心、级数、根基、幂零根基、Levi 子代数与 Γ-三元组"""
        t = gamma_triple(g)
        return build_report(g, structure=True, triple=t, mu=mu_rep(g, t))

    def derivations(self, g: LieAlgebra) -> ReportDocument:
        return build_report(g, der=derivation_space(g))

    def derivation_document(self, g: LieAlgebra) -> str:
        """Der g 的结构常数文档，可重新解析"""
        return serialize_algebra(derivation_space(g).as_algebra, self.config.get('output.json_indent', 2))

    def tower(
        self,
        g: LieAlgebra,
        max_steps: Optional[int] = None,
        fast_path: Optional[str] = None,
    ) -> ReportDocument:
        report = tower_iterate(
            g,
            max_steps=max_steps if max_steps is not None else self.config.get('tower.max_steps', 16),
            fast_path=fast_path or self.config.get('tower.fast_path', 'auto'),
            divergence_window=self.config.get('tower.divergence_window', 3),
        )
        return build_report(g, tower=report)

    def hull(self, g: LieAlgebra) -> ReportDocument:
        """完备包 s ⊕ B ⊕ m"""
        t = gamma_triple(g)
        mu = mu_rep(g, t)
        return build_report(g, triple=t, mu=mu, hull=complete_hull(g, t, mu))

    def random_document(self, seed: Optional[int], family: Optional[str], max_dim: int) -> str:
        rng = np.random.default_rng(self.config.get('sampling.seed', 0) if seed is None else seed)
        g = random_solvable_extension(rng, family=family, max_dim=max_dim)
        return serialize_algebra(g, self.config.get('output.json_indent', 2))

    def run(self, command: str, g: LieAlgebra, options: Dict[str, Any]) -> ReportDocument:
        if command == "analyze":
            return self.analyze(g)
        if command == "der":
            return self.derivations(g)
        if command == "tower":
            return self.tower(g, options.get("max_steps"), options.get("fast_path"))
        if command == "hull":
            return self.hull(g)
        raise InputError(f"unknown command {command!r}; known: {', '.join(COMMANDS)}")

    def render(self, report: ReportDocument, fmt: Optional[str] = None) -> str:
        fmt = fmt or self.config.get('output.format', 'text')
        return render_report(report, fmt, self.config.get('output.json_indent', 2))

    def run_task(self, task: AnalysisTask) -> Dict[str, Any]:
        """
        批处理中的单个任务：计算报告并写入 task.output_path

        Returns:
            结果摘要
        """
        g = self.load(task.source)
        report = self.run(task.command, g, task.options)
        text = self.render(report, task.options.get("format"))
        Path(task.output_path).write_text(text, encoding='utf-8')
        return {'output_path': task.output_path, 'dim': g.dim, 'sha256': report.input['sha256']}

    def batch(
        self,
        sources: List[str],
        command: str,
        output_dir: Optional[str] = None,
        options: Optional[Dict[str, Any]] = None,
    ) -> BatchProcessor:
        """
        每个输入一个任务，报告写入输出目录

        Returns:
            执行完毕的 BatchProcessor
        """
        if command not in COMMANDS:
            raise InputError(f"unknown batch command {command!r}; known: {', '.join(COMMANDS)}")
        options = dict(options or {})
        fmt = options.get("format") or self.config.get('output.format', 'text')
        options["format"] = fmt
        out_dir = ensure_dir(Path(output_dir or self.config.get('batch.output_dir', 'output/reports')))

        queue = TaskQueue()
        for index, source in enumerate(sources, start=1):
            task_id = f"{index:03d}_{_source_stem(source)}"
            queue.add_task(AnalysisTask(
                task_id=task_id,
                source=source,
                command=command,
                output_path=str(out_dir / f"{task_id}.{'json' if fmt == 'json' else 'txt'}"),
                options=options,
            ))

        processor = BatchProcessor(queue, self.config.section('batch'), runner=self.run_task)
        processor.process_all_pending()
        return processor


def _source_stem(source: str) -> str:
    if source.startswith(CATALOG_PREFIX):
        name = source[len(CATALOG_PREFIX):]
    else:
        name = Path(source).stem
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name).strip("_") or "algebra"


class _Parser(argparse.ArgumentParser):
    """参数错误按输入错误处理（退出码 1）"""

    def error(self, message: str):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    # 全局选项既可写在子命令前也可写在子命令后
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=REPORT_FORMATS, default=argparse.SUPPRESS, help='输出格式')
    common.add_argument('--config', '-c', type=str, default=argparse.SUPPRESS, help='配置文件路径')
    common.add_argument('--log-level', type=str, default=argparse.SUPPRESS, help='日志级别')

    parser = _Parser(prog="lie-tower", description="Lie 代数的 Γ-分解与导子塔", parents=[common])
    sub = parser.add_subparsers(dest='command', required=True)

    analyze = sub.add_parser('analyze', parents=[common], help='结构分析与 Γ-三元组')
    analyze.add_argument('source', help='文档路径或 catalog:NAME')

    der = sub.add_parser('der', parents=[common], help='导子代数')
    der.add_argument('source', help='文档路径或 catalog:NAME')
    der.add_argument('--as-algebra', action='store_true', help='输出 Der g 的结构常数文档')

    tower = sub.add_parser('tower', parents=[common], help='导子塔与分类')
    tower.add_argument('source', help='文档路径或 catalog:NAME')
    tower.add_argument('--max-steps', type=int, default=None, help='最多计算的导子代数个数')
    tower.add_argument('--fast-path', choices=FAST_PATH_MODES, default=None, help='正规化子塔捷径')

    hull = sub.add_parser('hull', parents=[common], help='完备包 s ⊕ B ⊕ m')
    hull.add_argument('source', help='文档路径或 catalog:NAME')

    batch = sub.add_parser('batch', parents=[common], help='批量处理多个输入')
    batch.add_argument('sources', nargs='+', help='文档路径或 catalog:NAME')
    batch.add_argument('--command', dest='batch_command', choices=COMMANDS, default='analyze', help='对每个输入执行的子命令')
    batch.add_argument('--output-dir', '-o', type=str, default=None, help='报告目录')
    batch.add_argument('--max-steps', type=int, default=None)
    batch.add_argument('--fast-path', choices=FAST_PATH_MODES, default=None)

    random = sub.add_parser('random', parents=[common], help='生成随机可解扩张的文档')
    random.add_argument('--seed', type=int, default=None, help='随机种子，默认取配置 sampling.seed')
    random.add_argument('--family', choices=EXTENSION_FAMILIES, default=None)
    random.add_argument('--max-dim', type=int, default=8)

    return parser


def cli(argv: Optional[List[str]] = None) -> int:
    """
    命令行入口

    Returns:
        退出码：0 成功，1 输入错误，2 内部不变量失败
    """
    try:
        args = build_parser().parse_args(argv)
        workbench = TowerWorkbench(getattr(args, 'config', None), getattr(args, 'log_level', None))
        fmt = getattr(args, 'format', None)

        if args.command == 'batch':
            processor = workbench.batch(
                args.sources,
                args.batch_command,
                args.output_dir,
                {'format': fmt, 'max_steps': args.max_steps, 'fast_path': args.fast_path},
            )
            for task in processor.task_queue.tasks.values():
                status = task.output_path if task.exit_code == EXIT_OK else f"error: {task.error_message}"
                print(f"{task.task_id}: {task.status.value} ({status})")
            return processor.exit_code()

        if args.command == 'random':
            sys.stdout.write(workbench.random_document(args.seed, args.family, args.max_dim))
            return EXIT_OK

        g = workbench.load(args.source)
        if args.command == 'der' and args.as_algebra:
            sys.stdout.write(workbench.derivation_document(g))
            return EXIT_OK

        options = {
            'max_steps': getattr(args, 'max_steps', None),
            'fast_path': getattr(args, 'fast_path', None),
        }
        report = workbench.run(args.command, g, options)
        sys.stdout.write(workbench.render(report, fmt))
        return EXIT_OK

    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except (InputError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)
    except InvariantViolation as e:
        print(f"internal error: {e}", file=sys.stderr)
        return exit_code_for(e)


def main():
    """主函数"""
    sys.exit(cli())


if __name__ == "__main__":
    main()
