# Regex grammar
EPSILON_TOKEN = '@'  # the empty word
EMPTY_TOKEN = '#'  # the empty language
UNION_TOKEN = '|'
STAR_TOKEN = '*'
PLUS_TOKEN = '+'
OPEN_PAREN = '('
CLOSE_PAREN = ')'
RESERVED_CHARS = frozenset('|*+()@#')

# Operator words
OP_COMPLEMENT = '-'
OP_PLUS = '+'
OP_STAR = '*'
OP_POSITIVE_INTERIOR = '⊕'
OP_KLEENE_INTERIOR = '⊛'
OP_ALIASES = {
    '−': OP_COMPLEMENT,  # U+2212
}

# Modes and the operators each one uses, in tie-break order (- < closure < interior)
MODE_POSITIVE = 'positive'
MODE_KLEENE = 'kleene'
MODES = (MODE_POSITIVE, MODE_KLEENE)
MODE_OPERATORS = {
    MODE_POSITIVE: (OP_COMPLEMENT, OP_PLUS, OP_POSITIVE_INTERIOR),
    MODE_KLEENE: (OP_COMPLEMENT, OP_STAR, OP_KLEENE_INTERIOR),
}

# Orbit bounds
MAX_POSITIVE_ORBIT = 10  # |A(L)|
MAX_KLEENE_ORBIT = 14  # |D(L)|
MAX_UNARY_ORBIT = 6

# Automata
DEFAULT_STATE_CAP = 1_000_000
STATE_CAP_ENV = 'KLANG_STATE_CAP'

# Random regexes
DEFAULT_MAX_DEPTH = 4
LEAF_PROBABILITY = 0.5  # leaf vs. internal node at each level
SYMBOL_LEAF_PROBABILITY = 0.8  # letter vs. @/# among leaves

# Verification
DEFAULT_SAMPLES = 1000
ORACLE_SAMPLES = 200  # cross-validation per alphabet; each sample runs every operator word
DEFAULT_SEED = 1
DEFAULT_HORIZON = 8
DEFAULT_LATTICE_HORIZON = 3
MAX_LATTICE_WORDS = 16  # bitmask subsets of Σ^{≤n}: 2^16 of them
EXHAUSTIVE_LATTICE_WORDS = 8  # every X checked against every closed set
DEFAULT_SAMPLE_ALPHABETS = ('a', 'ab')
MAX_OPERATOR_WORD = 5
VERIFY_SUITES = (
    'axioms', 'duality', 'equations', 'example1', 'examples',
    'lemma1', 'oracle', 'table1', 'table2', 'unary',
)

# Positive cases: label -> (|B|, |A|, dual)
POSITIVE_CASES = {
    '1': (1, 2, '1'),
    '2': (2, 4, '3'),
    '3': (2, 4, '2'),
    '4': (3, 6, '5'),
    '5': (3, 6, '4'),
    '6': (4, 8, '7'),
    '7': (4, 8, '6'),
    '8': (4, 8, '8'),
    '9': (5, 10, '9'),
}

# Kleene cases: label -> (|E|, |D|, dual)
# Sub-cases 2a-3b use the naming of the prose, not the swapped table header rows
KLEENE_CASES = {
    '1a': (2, 4, '1b'),
    '1b': (2, 4, '1a'),
    '2a': (3, 6, '3a'),
    '2b': (4, 8, '3b'),
    '3a': (3, 6, '2a'),
    '3b': (4, 8, '2b'),
    '4': (4, 8, '5'),
    '5': (4, 8, '4'),
    '6': (6, 12, '7'),
    '7': (6, 12, '6'),
    '8': (5, 10, '8'),
    '9': (7, 14, '9'),
}

# Canned examples: label -> (regex, alphabet, complemented)
TABLE1_EXAMPLES = {
    '1': ('a*', 'a', False),
    '2': ('a', 'a', False),
    '3': ('aaa*', 'a', False),
    '4': ('a|aaaa', 'a', False),  # printed a|aaa is open, see TABLE1_PRINTED_ROW4
    '5': ('aa', 'a', False),
    '6': ('a|abaa', 'ab', False),
    '7': ('a|abaa', 'ab', True),
    '8': ('a|bb', 'ab', False),
    '9': ('a|ab|bb', 'ab', False),
}
TABLE1_PRINTED_ROW4 = ('a|aaa', 'a')

TABLE2_EXAMPLES = {
    '1a': ('a*', 'a', False),
    '1b': ('a+', 'a', False),
    '2a': ('a', 'a', False),
    '2b': ('a|@', 'a', False),
    '3a': ('aaa*|@', 'a', False),
    '3b': ('aaa*', 'a', False),
    '4': ('a|aaaa', 'a', False),
    '5': ('aa', 'a', False),
    '6': ('a|abaa', 'ab', False),
    '7': ('a|abaa', 'ab', True),
    '8': ('a|bb', 'ab', False),
    '9': ('a|ab|bb', 'ab', False),
}
# Sizes the Kleene case table gives next to the same example language; direct computation disagrees
TABLE2_PRINTED_SIZES = {
    '2a': (4, 8),
    '2b': (3, 6),
    '3a': (4, 8),
    '3b': (3, 6),
}
