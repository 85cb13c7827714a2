"""Scripted consultation on the hand-traceable 3x3 matrix.

Shows the three inference moves step by step: dominance elimination under
partial information, picking the most separating question, and emitting an
IF-THEN justification even though the knowledge base stores no rules.
"""

from conexsys import ConsultSession, TruthValue, dominance_bound
from conexsys import fixtures

kb = fixtures.toy_kb()
print("learning matrix (bias first):")
for name, row in zip(kb.goal_names, kb.weights):
    print(f"  {name}: {row.tolist()}")
print()

session = ConsultSession(kb)
print(f"fresh session: viable goals {[kb.goal_names[g] for g in session.viable]}, "
      f"sums {session.sums()}")
print()

# ----------------------------------------------------------------------
# The operator reports that reading V2 is True. V1 and V3 stay unknown.
# ----------------------------------------------------------------------
verdict = session.answer(kb.input_index("V2"), TruthValue.TRUE)
print(f"after V2=True: sums {session.sums()}")
bound = dominance_bound(kb, 2, 1, [0, 2])
print(f"G3 leads G2 by {session.sums()[2] - session.sums()[1]}, while V1 and V3 "
      f"together can only swing that gap by {bound}")
print(f"so G2 is eliminated: viable {[kb.goal_names[g] for g in session.viable]}")
print()

# ----------------------------------------------------------------------
# Backward chaining: which reading separates G1 and G3 best?
# ----------------------------------------------------------------------
question = verdict.variable
print(f"the engine asks for {kb.input_names[question]} "
      f"(weight gap 9 on V3 versus 1 on V1)")
for value, label in ((TruthValue.TRUE, "True"), (TruthValue.FALSE, "False")):
    probe = ConsultSession(kb)
    probe.answer(kb.input_index("V2"), TruthValue.TRUE)
    outcome = probe.answer(question, value)
    print(f"  if {kb.input_names[question]} is {label}: "
          f"concluded {kb.goal_names[outcome.goal]}")
print()

# ----------------------------------------------------------------------
# Justification: a rule assembled on demand from the known readings.
# ----------------------------------------------------------------------
just = session.justify(kb.goal_index("G2"))
print(f"why is G2 out?  {just.rule_text(kb)}")
print(f"(dominating goal: {kb.goal_names[just.dominator]}; replaying the rule's "
      "literals alone re-derives the elimination)")

# ----------------------------------------------------------------------
# And the unavailable path: nothing more can be measured.
# ----------------------------------------------------------------------
stuck = ConsultSession(kb)
stuck.answer(kb.input_index("V2"), TruthValue.TRUE)
stuck.answer(kb.input_index("V3"), TruthValue.UNAVAILABLE)
final = stuck.answer(kb.input_index("V1"), TruthValue.UNAVAILABLE)
print()
print(f"if V1 and V3 are unavailable the verdict stays unconfirmed; best guess "
      f"{kb.goal_names[final.goal]} (sums {stuck.sums()})")
