from star_frobenius.automata import Dfa
from star_frobenius.automata import Nfa
from star_frobenius.automata import complement
from star_frobenius.automata import glushkov
from star_frobenius.automata import glushkov_star
from star_frobenius.automata import is_infinite
from star_frobenius.automata import longest_accepted
from star_frobenius.automata import parse_nfa
from star_frobenius.automata import star_closure
from star_frobenius.automata import subset_construct
from star_frobenius.automata import trim_useful
from star_frobenius.automata import verify_rejected
from star_frobenius.automata import window_accepts
from star_frobenius.frobenius import CofiniteResult
from star_frobenius.frobenius import decide_cofinite
from star_frobenius.frobenius import frobenius_of_finite_set
from star_frobenius.frobenius import length_spectrum
from star_frobenius.frobenius import numeric_frobenius
from star_frobenius.reduction import CnfInstance
from star_frobenius.reduction import check_lemma
from star_frobenius.reduction import cnf_to_regex
from star_frobenius.reduction import parse_dimacs
from star_frobenius.reduction import sat_bruteforce
from star_frobenius.regex import Alphabet
from star_frobenius.regex import alphabet_of
from star_frobenius.regex import parse_regex
from star_frobenius.regex import symbol_length
from star_frobenius.regex import to_text
