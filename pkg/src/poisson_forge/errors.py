class CapabilityError(RuntimeError):
    """An internal guard tripped: degree bound exceeded, nonterminating
    reduction suspected, or similar.  The CLI maps this to exit code 3."""
