"""Pure-Python letter kernels; reference twin of ``_kernels.pyx``.

Letters are ints: A=1, A^-1=-1, B=2, B^-1=-2.  Move codes:
0 A>AB, 1 A>Ab, 2 B>BA, 3 B>Ba, 4 swap, 5 invA, 6 invB.
"""

_IMAGES = (
    {1: (1, 2), -1: (-2, -1), 2: (2,), -2: (-2,)},
    {1: (1, -2), -1: (2, -1), 2: (2,), -2: (-2,)},
    {1: (1,), -1: (-1,), 2: (2, 1), -2: (-1, -2)},
    {1: (1,), -1: (-1,), 2: (2, -1), -2: (1, -2)},
    {1: (2,), -1: (-2,), 2: (1,), -2: (-1,)},
    {1: (-1,), -1: (1,), 2: (2,), -2: (-2,)},
    {1: (1,), -1: (-1,), 2: (-2,), -2: (2,)},
)

NUM_T_MOVES = 4


def reduce_letters(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_core(letters):
    """Return ``(core, k)``: the cyclic core and how many letters were peeled per side."""
    red = reduce_letters(letters)
    i, j = 0, len(red) - 1
    while i < j and red[i] == -red[j]:
        i += 1
        j -= 1
    return red[i:j + 1], i


def image_cyclic(letters, move):
    table = _IMAGES[move]
    out = []
    for x in letters:
        for y in table[x]:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    i, j = 0, len(out) - 1
    while i < j and out[i] == -out[j]:
        i += 1
        j -= 1
    return out[i:j + 1]


def image_cyclic_length(letters, move):
    return len(image_cyclic(letters, move))


def minimize_letters(letters):
    """Greedy Whitehead descent over the four T-moves in fixed order."""
    cur, _ = cyclic_core(letters)
    moves = []
    while True:
        n = len(cur)
        for move in range(NUM_T_MOVES):
            img = image_cyclic(cur, move)
            if len(img) < n:
                cur = img
                moves.append(move)
                break
        else:
            return cur, moves
