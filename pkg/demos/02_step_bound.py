"""
Checking the |w| + 1 step bound exhaustively
============================================

For random languages we enumerate every word up to length n + 2 and check
that verdicts match membership and that no run takes more than |w| + 1
steps.  Dense machines hit a closed-form step count exactly.
"""

from collections import Counter

from finitetm import (
    compile_dense,
    compile_trie,
    cross_check,
    random_language,
    run,
    verify_equivalence,
    verify_step_bound,
)
from finitetm.verifier import iter_words

for n, size, seed in [(0, 1, 1), (3, 5, 2), (6, 20, 3), (9, 50, 4)]:
    lang = random_language(n, size, seed)
    dense, trie = compile_dense(lang), compile_trie(lang)
    reports = [
        verify_equivalence(dense, lang),
        verify_step_bound(dense, lang),
        verify_equivalence(trie, lang),
        verify_step_bound(trie, lang),
        cross_check(dense, trie, lang.n),
    ]
    print(f"n={n} size={size}: " + ", ".join(f"{r.property}={'ok' if r.passed else 'FAIL'}" for r in reports))

###############################################################################
# Step counts by input length for one language.  The dense column follows
# min(len, n) + 1; the trie column is the mean over all words of that length.
lang = random_language(5, 12, 7)
dense, trie = compile_dense(lang), compile_trie(lang)
dense_steps, trie_steps, count = Counter(), Counter(), Counter()
for w in iter_words(lang.n + 2):
    count[len(w)] += 1
    dense_steps[len(w)] += run(dense, w).steps
    trie_steps[len(w)] += run(trie, w).steps
print("len  dense  trie(mean)  bound")
for k in sorted(count):
    print(f"{k:>3}  {dense_steps[k] / count[k]:>5.0f}  {trie_steps[k] / count[k]:>10.2f}  {k + 1:>5}")
