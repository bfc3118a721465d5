"""Independent reference for the hashing layer (stdlib big integers only).

Prints golden values frozen into tests/test_algebra.cpp:
  - expand_message_xmd RFC 9380 vector check
  - hash_to_g1("tag-index", name || i) for name = 1, i = 0
  - hash_gt_to_scalar(identity)
"""
import hashlib

P = 21888242871839275222246405745257275088696311157297823662689037894645226208583
R = 21888242871839275222246405745257275088548364400416034343698204186575808495617


def expand_message_xmd(msg: bytes, dst: bytes, length: int) -> bytes:
    ell = (length + 31) // 32
    dst_prime = dst + bytes([len(dst)])
    msg_prime = bytes(64) + msg + length.to_bytes(2, "big") + b"\x00" + dst_prime
    b0 = hashlib.sha256(msg_prime).digest()
    bi = hashlib.sha256(b0 + b"\x01" + dst_prime).digest()
    out = bi
    for i in range(2, ell + 1):
        bi = hashlib.sha256(bytes(x ^ y for x, y in zip(b0, bi)) + bytes([i]) + dst_prime).digest()
        out += bi
    return out[:length]


def g1_dst(tag):
    return ("DSAUDIT-V01-" + tag + "-BN254G1_XMD:SHA-256_SVDW_RO_").encode()


def scalar_dst(tag):
    return ("DSAUDIT-V01-" + tag + "-BN254FR_XMD:SHA-256_WIDE_").encode()


def inv(a):
    return pow(a, P - 2, P)


def sqrt(a):
    r = pow(a, (P + 1) // 4, P)
    return r if r * r % P == a % P else None


def svdw(u):
    Z, B = 1, 3
    g = lambda x: (x * x * x + B) % P
    gz = g(Z)
    c1 = gz
    c2 = (-Z * inv(2)) % P
    c3 = sqrt((-gz * 3 * Z * Z) % P)
    if c3 % 2 == 1:
        c3 = P - c3
    c4 = (-4 * gz * inv(3 * Z * Z)) % P
    tv1 = u * u * c1 % P
    tv2 = (1 + tv1) % P
    tv1 = (1 - tv1) % P
    tv3 = inv(tv1 * tv2 % P)
    tv4 = u * tv1 * tv3 * c3 % P
    x1 = (c2 - tv4) % P
    x2 = (c2 + tv4) % P
    x3 = pow(tv2 * tv2 * tv3 % P, 2, P) * c4 % P
    x3 = (x3 + Z) % P
    for x in (x1, x2, x3):
        y = sqrt(g(x))
        if y is not None:
            break
    if (u % 2) != (y % 2):
        y = P - y
    return x, y


def add(p, q):
    (x1, y1), (x2, y2) = p, q
    if x1 == x2:
        assert y1 == y2
        lam = 3 * x1 * x1 * inv(2 * y1) % P
    else:
        lam = (y2 - y1) * inv(x2 - x1) % P
    x3 = (lam * lam - x1 - x2) % P
    return x3, (lam * (x1 - x3) - y1) % P


def hash_to_g1(tag, msg):
    uni = expand_message_xmd(msg, g1_dst(tag), 96)
    u0 = int.from_bytes(uni[:48], "big") % P
    u1 = int.from_bytes(uni[48:], "big") % P
    return add(svdw(u0), svdw(u1))


def encode_g1(pt):
    x, y = pt
    out = bytearray(x.to_bytes(32, "big"))
    out[0] |= 0xC0 if y > (P - 1) // 2 else 0x80
    return bytes(out)


def hash_to_scalar(tag, msg):
    return int.from_bytes(expand_message_xmd(msg, scalar_dst(tag), 64), "big") % R


if __name__ == "__main__":
    rfc = expand_message_xmd(b"", b"QUUX-V01-CS02-with-expander-SHA256-128", 0x20).hex()
    assert rfc == "68a985b87eb6b46952128911f2a4412bbc302a9d759667f87f7a21d803f07235", rfc
    msg = (1).to_bytes(32, "big") + (0).to_bytes(8, "big")
    pt = hash_to_g1("tag-index", msg)
    assert (pt[1] ** 2 - pt[0] ** 3 - 3) % P == 0
    print("hash_to_g1(tag-index, name=1 || i=0) =", encode_g1(pt).hex())
    print("hash_to_g1(tag-index, empty) =", encode_g1(hash_to_g1("tag-index", b"")).hex())
    identity_gt = bytes([0x40]) + bytes(191)
    print("hash_gt_to_scalar(identity) =", hex(hash_to_scalar("h-prime", identity_gt)))
    print("hash_to_scalar(chal-r, 16 zero bytes) =", hex(hash_to_scalar("chal-r", bytes(16))))
