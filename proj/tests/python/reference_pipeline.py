"""Pure-python reference implementation of the generation pipeline.

Python integers are exact, so this is an independent oracle for the C++
module: same seed in, bit-identical opcode buffer out. Deliberately slow and
simple; only use for small sizes.
"""

MODULUS = 2147483647  # 2^31 - 1
MULTIPLIER = 16807
MAX_STATE = MODULUS - 1

LEAF = 0
FUNC2 = 1


class ParkMillerRef:
    def __init__(self, seed):
        assert 1 <= seed <= MAX_STATE
        self.state = seed

    def next(self):
        self.state = (MULTIPLIER * self.state) % MODULUS
        return self.state

    def uniform_below(self, bound):
        assert 1 <= bound <= MAX_STATE
        cutoff = MAX_STATE - (MAX_STATE % bound)
        while True:
            v = self.next() - 1
            if v < cutoff:
                return v % bound


def random_shape_ref(internal_nodes, rng):
    tags = [LEAF if i % 2 == 0 else FUNC2 for i in range(2 * internal_nodes + 1)]
    length = len(tags)
    for i in range(length - 1):
        j = i + rng.uniform_below(length - i)
        tags[i], tags[j] = tags[j], tags[i]
    prefix = 0
    best = None
    best_k = 0
    for k, t in enumerate(tags, start=1):
        prefix += 1 if t == FUNC2 else -1
        if best is None or prefix < best:
            best = prefix
            best_k = k
    return tags[best_k:] + tags[:best_k]


def depth_ref(tags):
    pending = []
    best = 0
    for t in tags:
        if t == FUNC2:
            pending.append(2)
        else:
            best = max(best, len(pending) + 1)
            while pending:
                pending[-1] -= 1
                if pending[-1] == 0:
                    pending.pop()
                else:
                    break
    return best


def random_tree_ref(size, terminal_count, function_count, seed):
    """Returns (opcode bytes, depth)."""
    assert size % 2 == 1
    rng = ParkMillerRef(seed)
    tags = random_shape_ref((size - 1) // 2, rng)
    depth = depth_ref(tags)
    opcodes = bytearray()
    for t in tags:
        if t == FUNC2:
            pick = rng.uniform_below(function_count) if function_count > 1 else 0
            opcodes.append(terminal_count + pick)
        else:
            pick = rng.uniform_below(terminal_count) if terminal_count > 1 else 0
            opcodes.append(pick)
    return bytes(opcodes), depth
