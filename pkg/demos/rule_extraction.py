"""Extract IF-THEN rules from the pretrained lemonade matrix.

Feed the engine the full reading pattern of a refrigeration power short and
ask it to justify every goal it ruled out on the way to its conclusion.
The rules live nowhere in the knowledge base; each one is reconstructed
from the weight matrix so that its literals alone force the elimination.
"""

from conexsys import ConsultSession, TruthValue
from conexsys import fixtures

kb = fixtures.pretrained_kb()
scenario = fixtures.lemonade()

target = kb.goal_index("Short in Power Line 2")
pattern = scenario.goals[target].pattern
print("readings for a refrigeration power short:")
for name, bit in zip(kb.input_names, pattern):
    print(f"  {name}: {'problem' if bit else 'normal'}")
print()

session = ConsultSession(kb)
for k, bit in enumerate(pattern):
    verdict = session.answer(k, TruthValue.TRUE if bit else TruthValue.FALSE)

print(f"conclusion: {kb.goal_names[verdict.goal]}")
print()
print("justifications for every eliminated rival:")
for rival in sorted(session.eliminated_by):
    just = session.justify(rival)
    literals = len(just.literals)
    print(f"  {just.rule_text(kb)}")
    print(f"      ({literals} literal{'s' if literals != 1 else ''}, "
          f"dominated by {kb.goal_names[just.dominator]})")
