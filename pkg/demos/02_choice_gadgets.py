"""The two choice gadgets and their all-or-nothing ports.

Each gadget maximizes its own generation only when its port exchanges
exactly 0 or exactly x units with the outside -- nothing in between.
That binary behavior is what the hardness encodings exploit.

gsch exercises the choice by switching: its optimum is 3x, reached either
with all edges intact (port takes 0) or with the port--load edge switched
off (port takes x).

gfch exercises the choice through one adjustable-susceptance edge: its
optimum is 6.1x, reached at exactly the two interval endpoints, with the
same 0-or-x port behavior.
"""

from fractions import Fraction

from ldcflow import (
    Polarity,
    enumerate_endpoint_optima,
    gfch,
    gsch,
    optimal_switch_sets,
    solve_mff_endpoints,
    solve_msf_exhaustive,
)
from ldcflow.rational import format_value

x = Fraction(2)

switching = gsch(x, "v", Polarity.MINUS)
print(f"switching gadget, size {x}:")
print("  optimum:", format_value(solve_msf_exhaustive(switching).value), f"(= 3x = {3 * x})")
for switched, outcome in optimal_switch_sets(switching):
    removed = ", ".join(f"{e.a}--{e.b}" for e in sorted(switched)) or "(nothing)"
    print(f"  removing {removed}: port load = {format_value(outcome.solution.load['v'])}")

facts = gfch(x, "v", Polarity.MINUS)
adjustable = facts.facts_edges[0]
print(f"\nFACTS gadget, size {x}:")
print("  optimum:", format_value(solve_mff_endpoints(facts).value), "(= 6.1x)")
for assignment, outcome in enumerate_endpoint_optima(facts):
    s = assignment[adjustable]
    print(
        f"  susceptance {format_value(s)} on {adjustable.a}--{adjustable.b}:"
        f" edge flow = {format_value(outcome.solution.flow[adjustable])},"
        f" port load = {format_value(outcome.solution.load['v'])}"
    )
