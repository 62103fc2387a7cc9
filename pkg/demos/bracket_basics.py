"""A walk through the skein engine: resolve a few small diagrams, watch the
loop relation fire, and reduce the results to dual numbers.

Run:  python3 demos/bracket_basics.py
"""

from derived_skein import skein
from derived_skein.rings import eval_dual
from derived_skein.suites import (unknot_diagram, kink_diagram,
                                  trefoil_diagram)
from derived_skein.words import parse_word

# A crossingless loop labeled by the generator a of the handlebody group.
print("unknot on the core curve:", skein.resolve(unknot_diagram()))

# A single kink multiplies the class by -t^3; this value pins the smoothing
# convention (the mirror kink gives -t^-3).
print("positive kink:", skein.resolve(kink_diagram(parse_word("a"))))
print("negative kink:",
      skein.resolve(kink_diagram(parse_word("a"), positive=False)))

# The trefoil as the closure of a three-crossing two-strand braid.  All its
# loops are contractible, so the loop relation -(t^2 + t^-2) clears them out
# and only a scalar times the empty link survives.
trefoil = skein.resolve(trefoil_diagram())
print("trefoil:", trefoil)

# The same element via the brute-force state enumerator (independent path).
assert trefoil == skein.resolve_oracle(trefoil_diagram())
print("oracle agrees with the recursive resolver")

# Reduce t -> -1 + e.  The value part is the classical (t = -1) evaluation;
# the e-part is the first-order deformation.
for key, coeff in trefoil.terms.items():
    print("dual reduction of the trefoil coefficient:", eval_dual(coeff))
