"""
异常定义模块
所有精确计算、枚举与校验过程中抛出的异常类型
"""


class EnumeraError(Exception):
    """所有领域异常的基类"""


class ContractViolation(EnumeraError, ValueError):
    """调用前置条件不满足（参数维度不符、变量列表不一致等）"""


class UnsupportedDeltaError(EnumeraError, ValueError):
    """节点数 δ 不在 {1, 2, 3} 之内"""

    def __init__(self, delta):
        self.delta = delta
        super().__init__(f"不支持的节点数 δ={delta}，仅支持 1、2、3")


class OutOfRangeError(EnumeraError, ValueError):
    """公式结果超出有意义的范围（例如次数为负）"""


class InconsistentInputError(EnumeraError, ValueError):
    """输入数据之间互相矛盾（例如对偶 Plücker 关系无整数解）"""


class GenericityError(EnumeraError, RuntimeError):
    """构型未通过一般性检验，或扫描途中发现非一般位置"""


class SearchBudgetExceeded(EnumeraError, RuntimeError):
    """回溯搜索超出节点预算"""


class InternalConsistencyError(EnumeraError, RuntimeError):
    """内部推导与声明的数值不一致（构建失败）"""
