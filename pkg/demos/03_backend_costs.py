"""
What the dense construction costs
=================================

The dense machine has 2**(n+1) + 1 states whatever the language, so its
size doubles with every extra symbol of the longest word.  The trie machine
grows with the total length of the words instead.
"""

import time

from finitetm import CompileOptions, compile_dense, compile_trie, random_language

print(" n  words   dense states  trie states  dense ms")
for n in range(2, 19, 2):
    lang = random_language(n, min(32, 2 ** (n + 1) - 1), seed=n)
    t0 = time.perf_counter()
    dense = compile_dense(lang)
    ms = (time.perf_counter() - t0) * 1e3
    trie = compile_trie(lang)
    print(f"{n:>2}  {len(lang):>5}  {dense.n_states:>13}  {trie.n_states:>11}  {ms:>8.1f}")

###############################################################################
# Past n = 20 the dense backend refuses to compile unless forced.
try:
    compile_dense(random_language(21, 3, seed=0))
except ValueError as exc:
    print("refused:", exc)
print(compile_dense(random_language(3, 3, seed=0), CompileOptions(max_n_guard=2, force=True)))
