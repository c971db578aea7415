class ContractError(AssertionError):
    """Raised when an operation is called outside its precondition."""
