from .de import DeConfig, de_generation, de_offspring, de_run
from .iasa import (IasaConfig, IntegerCodec, iasa_accept, iasa_cool,
                   iasa_differential_crossover, iasa_mutate, iasa_run)
from .rasa import (RasaConfig, geometric_rank_select, identity_guard,
                   metropolis_replace, rank_probabilities, rasa_run)
from .sade import (SadeConfig, sade_differential, sade_generation,
                   sade_local_mutate, sade_mutate, sade_run, sade_select)

__all__ = [
    "DeConfig", "de_generation", "de_offspring", "de_run",
    "IasaConfig", "IntegerCodec", "iasa_accept", "iasa_cool",
    "iasa_differential_crossover", "iasa_mutate", "iasa_run",
    "RasaConfig", "geometric_rank_select", "identity_guard",
    "metropolis_replace", "rank_probabilities", "rasa_run",
    "SadeConfig", "sade_differential", "sade_generation",
    "sade_local_mutate", "sade_mutate", "sade_run", "sade_select",
]
