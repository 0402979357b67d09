"""Tour 2: Demazure subsets, the saturation recursion and string structure.

Run as: python3 demos/02_demazure_subsets.py
"""

import qcrystal as qc

datum = qc.cartan_datum("A2")
graph = qc.generate_crystal(datum, (1, 1))

# B_w grows along any reduced word: saturate the last letter first.  The
# chain below follows prefixes of w0 = s1 s2 s1 from the right.
w0 = qc.longest_word(datum)
print(f"growth along suffixes of w0 = {w0}:")
for k in range(len(w0) + 1):
    word = w0[len(w0) - k:]
    dc = qc.demazure_crystal(graph, word)
    print(f"  word {word!s:<12} -> {sorted(dc.members)}")

# Different reduced words of the same element cut out the same subset.
for word in qc.all_reduced_words(datum, w0):
    assert qc.demazure_crystal(graph, word).members == set(graph.all_ids())
print("\nall reduced words of w0 give the full crystal:",
      qc.all_reduced_words(datum, w0))

# The extremal-weight ladder: reflect the highest weight letter by letter;
# the m values count the lowering steps between consecutive extremal
# elements, and the ladder must stay nonnegative along a reduced word.
ladder = qc.extremal_weights(datum, (1, 1), w0)
print("\nextremal ladder for w0:")
for weight, m in ladder:
    print(f"  {weight}" + (f"   (reached by {m} lowering steps)" if m is not None else ""))
print("extremal element of B_w0:", qc.extremal_element(graph, w0),
      "with weight", graph.weight(qc.extremal_element(graph, w0)))

# String property: every i-string meets B_w in everything, only its top,
# or nothing.  Show the pattern for B_{s1} against the 2-strings.
dc = qc.demazure_crystal(graph, (1,))
print(f"\nB_(1,) = {sorted(dc.members)} against the 2-strings:")
for s in qc.i_strings(graph, 2):
    hit = dc.members.intersection(s.members)
    kind = "full" if hit == set(s.members) else ("top" if hit else "empty")
    print(f"  string {s.members} -> {kind}")
ok, _ = qc.verify_string_property(dc, 2)
print("string property verified:", ok)

# Filtration layers stratify by string length l = eps + phi; singleton
# layers must sit at a string top with i-weight l > 0.
layers = qc.filtration_layers(dc, 2)
print("\nfiltration layers of B_(1,) in direction 2:", dict(layers))
ok, _ = qc.verify_filtration_structure(dc, 2)
print("filtration structure verified:", ok)

# Quotients along a covering pair are strings minus their tops.
big = qc.demazure_crystal(graph, (2, 1))
small = qc.demazure_crystal(graph, (1,))
diff, witness = qc.quotient_strings(big, small, 2)
print(f"\nB_(2,1) minus B_(1,) = {sorted(diff)} (strings minus tops: "
      f"{'ok' if witness is None else witness})")
