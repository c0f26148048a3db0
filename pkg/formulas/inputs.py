"""
公式输入校验
把 Pydantic 的校验错误统一转换为 ContractViolation
"""
from pydantic import BaseModel, ValidationError

from kernel.errors import ContractViolation


def validated(model_cls: type[BaseModel], **values) -> BaseModel:
    """按模型校验输入，失败时抛出 ContractViolation"""
    try:
        return model_cls(**values)
    except ValidationError as e:
        details = "; ".join(err["msg"] for err in e.errors())
        raise ContractViolation(f"{model_cls.__name__} 输入不合法 {values}: {details}") from e


def require_int(name: str, value, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ContractViolation(f"{name} 必须为整数，实际为 {value!r}")
    if minimum is not None and value < minimum:
        raise ContractViolation(f"{name} 必须 ≥ {minimum}，实际为 {value}")
    return value
