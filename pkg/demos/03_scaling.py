# wall time of decide_union on the generated families, with a log-log fit
import time
import numpy as np
from gtesunion import decide_union
from gtesunion.families import FAMILIES, of_size

sizes = np.array([1000, 2000, 4000, 8000])

for tag, family in sorted(FAMILIES.items()):
    times = []
    for n in sizes:
        p = of_size(family, int(n))
        t0 = time.perf_counter()
        v = decide_union(p.sig, p.E, p.F)
        times.append(time.perf_counter() - t0)
    times = np.array(times)
    slope, _ = np.polyfit(np.log(sizes), np.log(times), 1)
    print(f"{tag:22} {'yes' if v else 'no':3} " +
          " ".join(f"{t * 1000:8.1f}" for t in times) + f"   ms, exponent {slope:.2f}")

# per-unit cost of the last family (Unary), roughly flat means linear
print(times / sizes * 1e6, "us per unit of input")
