"""
Repo-wide pseudo random number generation.

Every random decision in the solver (graph generation, Kruskal tie shuffles,
PAO draws, pair selection) goes through Xoshiro256StarStar seeded via
splitmix64, so a run is a pure function of its seeds on every platform.
Seeds for individual trials come from TrialSeedSchedule.
"""

from typing import List, MutableSequence, TypeVar

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

# Pair selection lives in its own seed domain; population size and trial
# counts are capped at 4096 so slot<<16 ^ trial never reaches this value.
SELECTION_TAG = 0xFFFF_FFFF

T = TypeVar("T")


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def splitmix64(x: int) -> int:
    """One splitmix64 output for state x (a bijection on 64-bit integers)"""
    return _mix64((x + GOLDEN_GAMMA) & MASK64)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256StarStar:
    """xoshiro256** with its 256-bit state expanded from a 64-bit seed by splitmix64"""

    __slots__ = ("_s",)

    def __init__(self, seed: int):
        state = seed & MASK64
        words = []
        for _ in range(4):
            state = (state + GOLDEN_GAMMA) & MASK64
            words.append(_mix64(state))
        if not any(words):
            words[0] = GOLDEN_GAMMA
        self._s = words

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) without modulo bias"""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) - bound) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def shuffle(self, items: MutableSequence[T]) -> None:
        """In-place Fisher-Yates shuffle"""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> List[int]:
        items = list(range(n))
        self.shuffle(items)
        return items


class TrialSeedSchedule:
    """
    Derives every seed of a run from the master seed.

    seed(generation, tree_slot, trial_index) =
        splitmix64(master ^ generation<<32 ^ tree_slot<<16 ^ trial_index)

    Generation 0 is used for population initialisation; evolution steps use
    generations 1, 2, ... The same schedule drives local and distributed runs.
    """

    def __init__(self, master_seed: int):
        self.master_seed = master_seed & MASK64

    def trial_seed(self, generation: int, tree_slot: int, trial_index: int) -> int:
        key = self.master_seed ^ ((generation << 32) & MASK64) ^ (tree_slot << 16) ^ trial_index
        return splitmix64(key & MASK64)

    def init_seed(self, tree_slot: int) -> int:
        return self.trial_seed(0, tree_slot, 0)

    def selection_seed(self, generation: int) -> int:
        key = self.master_seed ^ ((generation << 32) & MASK64) ^ SELECTION_TAG
        return splitmix64(key & MASK64)
