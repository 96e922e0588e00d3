"""How often the underlying-graph steps hold on random balanced hypergraphs.

For each instance with #in = #out = c on every hyperedge, the Cheeger lower
bound search picks an underlying graph G with lambda_k(G) > 0 (k = m_V + 1)
and records two intermediate claims next to the final bound.
"""

import numpy as np

from hyperlap import cheeger, core


def main(count: int = 300, seed: int = 11):
    rng = np.random.default_rng(seed)
    tally = {"instances": 0, "pass": 0, "inconclusive": 0, "fail": 0}
    zero_claim = step_claim = 0
    for _ in range(count):
        n = int(rng.integers(4, 9))
        m = int(rng.integers(1, 6))
        g = core.random_hypergraph(rng, n, m, balanced=True)
        r = cheeger.verify_cheeger_lower_underlying(g)
        if not r.applicable:
            continue
        tally["instances"] += 1
        tally[r.status] = tally.get(r.status, 0) + 1
        if r.status != "pass":
            continue
        found = r.witnesses["findings"]
        zero_claim += found["lambda_{k-1}(G)==0"]
        step_claim += found["lambda_min>=c*lambda_k(G)"]
    print(tally)
    done = tally["pass"] + tally["fail"]
    print(f"lambda_min >= h^2/(2c) and h <= c h(G): {tally['pass']}/{done} hold")
    print(f"lambda_(k-1)(G) = 0:                  {zero_claim}/{done} hold")
    print(f"lambda_min >= c lambda_k(G):            {step_claim}/{done} hold")


if __name__ == "__main__":
    main()
