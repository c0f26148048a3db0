"""
控制台日志工具
进度信息统一输出到标准错误，标准输出只留给报告
"""
import sys

_state = {"verbose": False}


def set_verbose(enabled: bool) -> None:
    """开启或关闭进度日志"""
    _state["verbose"] = bool(enabled)


def _emit(message: str) -> None:
    if _state["verbose"]:
        print(message, file=sys.stderr)


def banner(title: str) -> None:
    """打印分隔横幅"""
    _emit("=" * 60)
    _emit(title)
    _emit("=" * 60)


def info(message: str) -> None:
    _emit(f"🔍 {message}")


def done(message: str) -> None:
    _emit(f"✅ {message}")


def warn(message: str) -> None:
    _emit(f"⚠️ {message}")


def fail(message: str) -> None:
    """失败信息不受 verbose 开关影响"""
    print(f"❌ {message}", file=sys.stderr)
