"""Brute-force reference splitter used as an independent oracle in tests.

Unlike the production single-pass splitter, this one literally computes
the set of boundary positions demanded by each splitting rule over the
raw character array, then cuts the string at every boundary/separator.
ASCII only, which is all the randomized tests generate.
"""


def reference_split(name: str) -> list[str]:
    n = len(name)
    upper = [c.isupper() and c.isascii() for c in name]
    lower = [c.islower() and c.isascii() for c in name]
    digit = [c.isdigit() and c.isascii() for c in name]
    letter = [u or l for u, l in zip(upper, lower)]

    boundaries = set()
    # rule a: uppercase after a lowercase letter or a digit
    for i in range(1, n):
        if upper[i] and (lower[i - 1] or digit[i - 1]):
            boundaries.add(i)
    # rule b: last uppercase of an uppercase run that is followed by lowercase
    i = 0
    while i < n:
        if upper[i]:
            j = i
            while j + 1 < n and upper[j + 1]:
                j += 1
            if j + 1 < n and lower[j + 1]:
                boundaries.add(j)
            i = j + 1
        else:
            i += 1

    words = []
    current = []
    for i, ch in enumerate(name):
        if not letter[i]:
            if current:
                words.append("".join(current))
                current = []
            continue
        if i in boundaries and current:
            words.append("".join(current))
            current = []
        current.append(ch.lower())
    if current:
        words.append("".join(current))
    return words
