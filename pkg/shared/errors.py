from typing import Any, Dict, List, Optional


class SrsqError(Exception):
    pass


class ComplexError(SrsqError, ValueError):
    pass


class IdealError(SrsqError, ValueError):
    pass


class FieldError(SrsqError, ValueError):
    pass


class BudgetExceededError(SrsqError):
    """A scan would need more homology evaluations than the configured budget."""

    def __init__(self, required: int, budget: int, what: str = "scan"):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(f"{what} needs {required} evaluations, budget is {budget}")


class BruteForceBoundError(SrsqError):
    def __init__(self, n: int, bound: int):
        self.n = n
        self.bound = bound
        super().__init__(f"brute force over 2^{n} subsets refused (bound n <= {bound})")


class ImplicationViolation(SrsqError):
    def __init__(self, items: List[Dict[str, Any]], subject: Optional[str] = None):
        self.items = items
        self.subject = subject
        names = ", ".join(str(i.get("name")) for i in items)
        super().__init__(f"implication violated on {subject or 'input'}: {names}")
