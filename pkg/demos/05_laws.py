"""Machine-checked structure: comonad, functor and laxator laws.

The plain construction is a comonad on execution categories: erasing
mana is the counit, duplicating it is the comultiplication. Because the
categories are free, checking the equations on generators decides them
completely. The span assignment of the external view is likewise
functorial, and pool merging is natural. All three law families are
checked here on a sample of nets, with JSON-ready reports.
"""

import json
import random

from mananets import (check_comonad_laws, check_functor_laws,
                      check_laxator_naturality)
from mananets.sampling import (random_marking, random_net,
                               random_net_morphism, random_policy,
                               random_state, random_trace)

rng = random.Random(11)

# Comonad laws on one random net, naturality on a random morphism out of it.
net = random_net(rng)
report = check_comonad_laws(net, [random_net_morphism(rng, net)])
print("comonad laws:")
print(json.dumps(report.to_json_list(), indent=2))
for note in report.notes:
    print("note:", note)

# Functor laws: identity and composition of the span assignment,
# exercised on random traces and all their split points.
policy = random_policy(rng, net)
traces = [random_trace(rng, net, random_marking(rng, net, 4)) for _ in range(20)]
print("\nfunctor laws:", json.dumps(check_functor_laws(net, policy, traces).to_json_list()))

# Laxator naturality: merge pools then act, or act then merge.
samples = [(random_trace(rng, net, random_marking(rng, net, 4)),
            random_trace(rng, net, random_marking(rng, net, 4)),
            random_state(rng, net).pool,
            random_state(rng, net).pool)
           for _ in range(5)]
statuses = [r.status for r in check_laxator_naturality(net, policy, samples).results]
print("laxator naturality per sample:", statuses)
