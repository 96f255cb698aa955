from knotsym import PermGroup, parse_cycles


def perm(text: str, n: int):
    return parse_cycles(text, n)


def gen(n: int, *texts: str) -> PermGroup:
    return PermGroup.generate([parse_cycles(t, n) for t in texts], degree=n)
