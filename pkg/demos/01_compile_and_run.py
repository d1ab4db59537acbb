"""
Compiling a finite language and watching the machine run
=========================================================

A finite language over {0, 1} compiles into a single-tape machine that
reads its input once, left to right, and halts after at most |w| + 1 steps.
"""

from finitetm import FiniteLanguage, compile_dense, compile_trie, run, serialize_machine

lang = FiniteLanguage.of("1", "01", "110")
print("language:", lang.sorted_words(), "n =", lang.n)

###############################################################################
# The dense backend has a state for every binary prefix up to length n.
# The trie backend only keeps prefixes of member words.
dense = compile_dense(lang)
trie = compile_trie(lang)
print(dense)
print(trie)

###############################################################################
# Tracing a run: each step erases the cell under the head and moves right.
# The state label spells out the prefix read so far.
outcome = run(dense, "01", want_trace=True)
for config in outcome.trace:
    print(f"step {config.steps}: {dense.labels[config.state]:<9} head={config.head} tape={config.window(0, 3)}")
print("verdict:", outcome.verdict.value, "after", outcome.steps, "steps")

###############################################################################
# Overlong inputs are rejected after n + 1 reads by the dense machine.  The
# trie machine gives up as soon as the prefix can no longer be completed.
for word in ["0110", "111", "", "110"]:
    d, t = run(dense, word), run(trie, word)
    print(f"{word or 'eps':>5}: dense {d.verdict.value} in {d.steps}, trie {t.verdict.value} in {t.steps}")

###############################################################################
# Machines serialize to a plain text format.
print(serialize_machine(trie))
