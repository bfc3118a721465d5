"""Independent reference for challenge expansion: a full-array Fisher-Yates
shuffle driven by the SHA-256 counter keystream."""
import hashlib

from hash_oracle import hash_to_scalar


def keystream(seed: bytes):
    ctr = 0
    while True:
        block = hashlib.sha256(b"dsaudit-prp" + seed + ctr.to_bytes(8, "big")).digest()
        ctr += 1
        for i in range(4):
            yield int.from_bytes(block[8 * i: 8 * i + 8], "big")


def uniform(stream, bound):
    top = 2**64 - 1
    reject_from = top - (top % bound)
    while True:
        v = next(stream)
        if v < reject_from:
            return v % bound


def expand(c1, c2, d, k):
    perm = list(range(d))
    stream = keystream(c1)
    count = min(k, d)
    for i in range(count):
        j = i + uniform(stream, d - i)
        perm[i], perm[j] = perm[j], perm[i]
    coefs = [hash_to_scalar("chal-coef", c2 + j.to_bytes(8, "big")) for j in range(count)]
    return perm[:count], coefs


if __name__ == "__main__":
    c1, c2 = bytes(range(16)), bytes(range(16, 32))
    idx, coefs = expand(c1, c2, 1000, 300)
    assert len(set(idx)) == 300
    print("first indices:", idx[:10])
    print("index digest:", hashlib.sha256(b"".join(i.to_bytes(8, "big") for i in idx)).hexdigest())
    print("coef[0]:", "%064x" % coefs[0])
    print("coef[299]:", "%064x" % coefs[299])
    print("r:", "%064x" % hash_to_scalar("chal-r", bytes(range(32, 48))))
