"""
主程序入口
JSON 结果写到 stdout（或 --out 文件），日志写到 stderr
"""
import sys
import os
import json
import argparse
from pathlib import Path
from typing import List, Optional

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))


class CommandLineError(Exception):
    """命令行参数错误"""


class JsonArgumentParser(argparse.ArgumentParser):
    """参数错误时抛异常而不是直接退出，由 main 输出 JSON 错误文档"""

    def error(self, message):
        raise CommandLineError(message)


def setup_environment():
    """设置运行环境"""
    if sys.platform == "win32":
        import io
        sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding='utf-8')
        sys.stderr = io.TextIOWrapper(sys.stderr.buffer, encoding='utf-8')

    os.environ['PYTHONUTF8'] = '1'
    os.environ['PYTHONIOENCODING'] = 'utf-8'


def check_dependencies() -> bool:
    """检查依赖"""
    print("🔍 检查依赖...", file=sys.stderr)
    print("="*50, file=sys.stderr)

    # 正确的导入名映射
    required_packages = [
        ("sympy", "sympy"),
        ("mpmath", "mpmath"),
        ("numpy", "numpy"),
        ("networkx", "networkx"),
        ("pandas", "pandas"),
        ("python-dotenv", "dotenv"),
    ]

    missing_packages = []

    for pkg_name, import_name in required_packages:
        try:
            __import__(import_name)
            print(f"✅ {pkg_name}", file=sys.stderr)
        except ImportError as e:
            print(f"❌ {pkg_name} - 错误: {e}", file=sys.stderr)
            missing_packages.append(pkg_name)

    if missing_packages:
        print(f"\n⚠️ 缺少依赖: {', '.join(missing_packages)}", file=sys.stderr)
        print("\n请运行以下命令安装:", file=sys.stderr)
        print(f"pip install {' '.join(missing_packages)}", file=sys.stderr)
        return False

    from config.precision import precision_config

    print(f"🔧 精度档位: {', '.join(precision_config.list_available_profiles())}", file=sys.stderr)
    print(f"🔧 当前精度: {precision_config.resolve_bits()} 位", file=sys.stderr)
    return True


def build_parser() -> JsonArgumentParser:
    """各子命令共享同一组选项，未知选项一律拒绝"""
    common = JsonArgumentParser(add_help=False)
    common.add_argument('--kin', type=str, help='运动学点JSON文件')
    common.add_argument('--samples', type=int, help='随机样本数')
    common.add_argument('--seed', type=int, help='随机种子（默认0）')
    common.add_argument('--tol', type=float, help='数值积分误差目标')
    common.add_argument('--prec', type=int, help='mpmath 精度（二进制位）')
    common.add_argument('--basis', type=str, default='mu', choices=['mu', 'nu'], help='余作用基')
    common.add_argument('--out', type=str, help='输出JSON文件，缺省写stdout')

    parser = JsonArgumentParser(description='Feynman图与sunrise余作用工具箱')
    parser.add_argument('--check', action='store_true', help='只检查依赖不运行')
    subparsers = parser.add_subparsers(dest='command', parser_class=JsonArgumentParser)

    sub = subparsers.add_parser('symanzik', parents=[common], help='Symanzik多项式')
    sub.add_argument('graph', help='图文件或内置图名')

    sub = subparsers.add_parser('subdivide', parents=[common], help='边细分')
    sub.add_argument('graph')
    sub.add_argument('--counts', type=str, required=True, help='如 e1:1,e2:2')

    sub = subparsers.add_parser('integrand', parents=[common], help='积分形式与细分拉回')
    sub.add_argument('graph', help='图文件、内置图名或 catalog')
    sub.add_argument('--dim', type=int, default=2)
    sub.add_argument('--counts', type=str)
    sub.add_argument('--dim-sub', dest='dim_sub', type=int)

    subparsers.add_parser('coaction', parents=[common], help='sunrise余作用表')
    subparsers.add_parser('verify-appendix', parents=[common], help='系数表随机验证')

    sub = subparsers.add_parser('periods', parents=[common], help='椭圆周期与准周期')
    sub.add_argument('--base', type=str, default='P1', help='Weierstrass模型的基点 P1..P6')

    sub = subparsers.add_parser('sv-matrix', parents=[common], help='单值周期矩阵')
    sub.add_argument('--tau', type=str, required=True)
    sub.add_argument('--lam', type=str, default='1')
    sub.add_argument('--z1', type=str)
    sub.add_argument('--z2', type=str)

    sub = subparsers.add_parser('quadrature', parents=[common], help='单纯形数值积分')
    sub.add_argument('--form', type=str, required=True)
    sub.add_argument('--tube', action='store_true', help='附带管状积分核对')

    sub = subparsers.add_parser('eichler', parents=[common], help='正则化Eichler积分')
    sub.add_argument('--qexp', type=str, required=True, help='q展开JSON文件或内置名 delta:N')
    sub.add_argument('--tau', type=str, required=True)
    sub.add_argument('--power', type=int, default=0)

    sub = subparsers.add_parser('selftest', parents=[common], help='验收自检')
    sub.add_argument('--only', type=str, help='逗号分隔的检查项')

    return parser


SHARED_FIELDS = ('kin', 'samples', 'seed', 'tol', 'prec', 'basis', 'out')


def build_request(args: argparse.Namespace):
    from commands import CommandRequest

    values = vars(args).copy()
    command = values.pop('command')
    values.pop('check', None)
    graph = values.pop('graph', None)
    shared = {name: values.pop(name, None) for name in SHARED_FIELDS}
    shared['basis'] = shared['basis'] or 'mu'
    return CommandRequest(
        command=command,
        inputs=[graph] if graph else [],
        options=values,
        **shared,
    )


def write_output(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """主函数，返回退出码"""
    setup_environment()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CommandLineError as e:
        print(f"❌ 参数错误: {e}", file=sys.stderr)
        document = {"command": None, "error": {"type": "ArgumentError", "message": str(e)}}
        sys.stdout.write(json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2) + "\n")
        return 2

    if args.check:
        return 0 if check_dependencies() else 1
    if not args.command:
        parser.print_help(sys.stderr)
        return 2

    from commands.command_factory import execute_command

    request = build_request(args)
    result = execute_command(request)
    write_output(result.to_json(), request.out)
    return result.exit_code


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\n👋 程序已退出", file=sys.stderr)
        sys.exit(1)
