"""Shared reference sequences and small helpers for the test suite.

The long strings are known-good sequences for specific (n, k): two full
de Bruijn sequences (every window exactly once), the 51-window universal
cycle joined from all windows of weight < 4 plus the period-<6 and one
period-6 cycle of weight 4 (n=6), and cut-down sequences of lengths 46
and 52.  Tests treat them as frozen expected values.
"""

# full de Bruijn sequence, n=6, k=2, traced from 000000
DB_N6_K2 = "0000001111110111100111000110110100110000101110101100101010001001"

# full de Bruijn sequence, n=3, k=4, traced from 000
DB_N3_K4 = "0003303203103002302202102001301201133132131123122333232221211101"

# universal cycle of length 51 for the main-cycle window set of (n=6, L=46)
MC_N6_L46 = "000000111100111000110110100110000101100101010001001"

# cut-down sequence of length 46, n=6, k=2, from start window 000001
CUT_N6_L46 = "0000011110011100011011010011000010110010100010"

# a valid cut-down sequence of length 52 for n=6, k=2 (verifier input only)
CUT_N6_L52 = "0000001111001110001101101001100001011101011001010001"


def to_word(text):
    return tuple(int(c) for c in text)


def to_symbols(text):
    return [int(c) for c in text]


def rotations(seq):
    return [seq[i:] + seq[:i] for i in range(len(seq))]
