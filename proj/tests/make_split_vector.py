"""Regenerates tests/data/split_reference.tsv by running the published splitting listing
in Python over seeded random tokens."""
import random
import re

NAME_BREAKUP_RE = re.compile(r"[^a-zA-Z]+")


def extract_names(token):
    token = token.strip()
    prev_p = [""]

    def ret(name):
        r = name.lower()
        if len(name) >= 3:
            yield r
            if prev_p[0]:
                yield prev_p[0] + r
                prev_p[0] = ""
        else:
            prev_p[0] = r

    for part in NAME_BREAKUP_RE.split(token):
        if not part:
            continue
        prev = part[0]
        pos = 0
        for i in range(1, len(part)):
            this = part[i]
            if prev.islower() and this.isupper():
                yield from ret(part[pos:i])
                pos = i
            elif prev.isupper() and this.islower():
                if 0 < i - 1 - pos <= 3:
                    yield from ret(part[pos:i - 1])
                    pos = i - 1
                elif i - 1 > pos:
                    yield from ret(part[pos:i])
                    pos = i
            prev = this
        last = part[pos:]
        if last:
            yield from ret(last)


def main():
    rng = random.Random(20180101)
    alphabet = "aAbBcXYZxyz_0 9-"
    tokens = ["FooBarBaz", "wdSize", "XMLParser", "HTMLParser", "x", "getHTTPResponseCode",
              "np_linspace", "a_b_cdef", "ABCdef", "IOError", "__init__", "snake_case_name"]
    for _ in range(3000):
        tokens.append("".join(rng.choice(alphabet) for _ in range(rng.randint(1, 14))).replace("\t", ""))
    with open("split_reference.tsv", "w") as f:
        for t in tokens:
            f.write(t + "\t" + " ".join(extract_names(t)) + "\n")


if __name__ == "__main__":
    main()
