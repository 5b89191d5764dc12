"""String-rewriting oracles for H_P and H_M.

Each rule is read straight off a relator of the factor presentation and moves
letters toward the order beta/delta, alpha, gamma.  Nothing here uses the
closed-form multiplication laws, so the two can be checked against each other.
"""

# gamma beta gamma = alpha beta  =>  gamma beta = beta alpha gamma,
# and gamma beta^-1 gamma = beta^-1 alpha  =>  gamma beta^-1 = beta^-1 alpha gamma
P_RULES = [
    ("bB", ""),
    ("Bb", ""),
    ("aa", ""),
    ("gg", ""),
    ("ga", "ag"),
    ("ab", "ba"),
    ("aB", "Ba"),
    ("gb", "bag"),
    ("gB", "Bag"),
]

# gamma delta gamma = delta^2  =>  gamma delta = delta delta gamma
M_RULES = [
    ("D", "dd"),
    ("ddd", ""),
    ("aa", ""),
    ("gg", ""),
    ("ga", "ag"),
    ("ad", "da"),
    ("gd", "ddg"),
]


def reduced(word, rules):
    while True:
        word0 = word
        for left, right in rules:
            word = word.replace(left, right)
        if word == word0:
            return word


def p_oracle(word):
    """(n, a, c) with ``word`` = beta^n alpha^a gamma^c in H_P."""
    w = reduced(word, P_RULES)
    n = w.count("b") - w.count("B")
    assert w == ("b" * n if n >= 0 else "B" * -n) + "a" * w.count("a") + "g" * w.count("g"), w
    return n, w.count("a"), w.count("g")


def m_oracle(word):
    w = reduced(word, M_RULES)
    k = w.count("d")
    assert w == "d" * k + "a" * w.count("a") + "g" * w.count("g"), w
    return k, w.count("a"), w.count("g")
