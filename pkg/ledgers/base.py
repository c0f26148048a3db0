"""
账本构建器基类
包含所有分量账本共享的校验、组装与日志逻辑
"""
from typing import Iterable

from pydantic import ValidationError

from config.models import ComponentLedger, LedgerEntry
from kernel.errors import InternalConsistencyError, UnsupportedDeltaError
from utils import console


class LedgerBuilderBase:
    """分量账本构建器基类"""

    family = "ledger"

    def build(self, delta: int) -> ComponentLedger:
        raise NotImplementedError

    @staticmethod
    def _check_delta(delta: int) -> int:
        if isinstance(delta, bool) or delta not in (1, 2, 3):
            raise UnsupportedDeltaError(delta)
        return delta

    def _assemble(
        self,
        target_name: str,
        target_degree: int,
        entries: Iterable[LedgerEntry],
        null_components: Iterable[LedgerEntry] = ()
    ) -> ComponentLedger:
        """
        组装账本并校验加权总和

        Args:
            target_name: 目标簇名称
            target_degree: 目标次数
            entries: 正贡献项
            null_components: 零贡献分量

        Returns:
            ComponentLedger: 通过校验的账本

        Raises:
            InternalConsistencyError: 计数或总和不一致
        """
        try:
            ledger = ComponentLedger(
                target_name=target_name,
                target_degree=target_degree,
                entries=list(entries),
                null_components=list(null_components),
            )
        except ValidationError as e:
            self._handle_error(e, target_name)
        self._log_ledger(ledger)
        return ledger

    def _log_ledger(self, ledger: ComponentLedger) -> None:
        console.banner(f"📒 {self.family}: {ledger.target_name}")
        for e in ledger.entries:
            console.info(f"{e.label}: {e.count} × {e.multiplicity} = {e.contribution}")
        for e in ledger.null_components:
            console.info(f"{e.label}: 零贡献分量（重数 {e.multiplicity}）")
        console.done(f"总和 {ledger.total} = {ledger.target_degree}")

    def _handle_error(self, e: ValidationError, target_name: str):
        """统一的错误处理：打印校验细节后抛出 InternalConsistencyError"""
        console.fail(f"{target_name} 账本校验失败")
        for err in e.errors():
            console.fail(f"  - {err.get('msg', 'unknown')}")
        raise InternalConsistencyError(f"{target_name} 账本构建失败: {e.errors()[0].get('msg', e)}") from e
