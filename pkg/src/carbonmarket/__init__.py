"""Joint electricity-carbon market toolkit.

Clears a carbon-aware electricity market under four pricing mechanisms,
computes prices, settlements and subsidies on DC networks, and verifies the
market-design properties (budget balance, individual rationality,
dispatch-following and truthful-bidding incentive compatibility).
"""

__version__ = "0.1.0"
