"""Pure-Python reference versions of the hot kernels.

Every function here has a twin of the same name and signature in
``_ckernels.pyx``. Images are 1-based: ``img[s - 1]`` is the image of ``s``.
"""


def inversions(img):
    count = 0
    h = len(img)
    for a in range(h):
        x = img[a]
        for b in range(a + 1, h):
            if x > img[b]:
                count += 1
    return count


def contains_321(img):
    # a 321 exists iff the entries that are not left-to-right maxima fail
    # to increase
    top = 0
    last_small = 0
    for x in img:
        if x > top:
            top = x
        elif x < last_small:
            return True
        else:
            last_small = x
    return False


def segment_cuts(img):
    """Ends of the segments: every u with max(img[:u]) == u."""
    cuts = []
    top = 0
    for u, x in enumerate(img, 1):
        if x > top:
            top = x
        if top == u:
            cuts.append(u)
    return cuts


def is_involution(img):
    for s, x in enumerate(img, 1):
        if img[x - 1] != s:
            return False
    return True


def inverse(img):
    out = [0] * len(img)
    for s, x in enumerate(img, 1):
        out[x - 1] = s
    return tuple(out)


def grid_blocks(m, n, rows, cols):
    """Union-find over the (m+1) x (n+1) grid.

    Element ``(r, c)`` has flat index ``r * (n + 1) + c``. Returns the block
    label of every element (labels numbered by first appearance in row-major
    order) and the number of blocks.
    """
    width = n + 1
    size = (m + 1) * width
    parent = list(range(size))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        x, y = find(x), find(y)
        if x != y:
            if x < y:
                parent[y] = x
            else:
                parent[x] = y

    for i, j in zip(rows, cols):
        for t in range(j, n + 1):
            union((i - 1) * width + t, i * width + t)
        for t in range(i, m + 1):
            union(t * width + j - 1, t * width + j)

    labels = [0] * size
    seen = {}
    for x in range(size):
        root = find(x)
        lab = seen.get(root)
        if lab is None:
            lab = seen[root] = len(seen)
        labels[x] = lab
    return labels, len(seen)
