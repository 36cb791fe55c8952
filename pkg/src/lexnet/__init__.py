"""Semantic similarity over a dictionary-derived spreading-activation network."""

from .activation import (ActivationPattern, StimulusVector, observe, run,
                         step, stimulus_for_word, top_activities, zero_pattern)
from .dictionary import (ClosureWarning, DictEntry, Unit, WordClass,
                         closure_warnings, index_entries, parse_dictionary,
                         serialize_entries)
from .errors import (BuildError, EmptyWordListError, FileFormatError,
                     LexnetError, ParseError, UnresolvableWordError)
from .morphology import MorphRule, MorphTable, default_table, root_form
from .network import (Link, Network, Node, Subreferant, compile_network,
                      count_root_occurrences, generate_refere, load_network,
                      save_network, subreferant_weights)
from .significance import SignificanceTable, build_significance, significance
from .similarity import (WordItem, WordList, make_wordlist, similarity_word,
                         similarity_wordlist, word_significance,
                         wordlist_stimulus)
from .textops import (Episode, EpisodeStore, Text, coherence,
                      expand_extra_word, load_episodes, make_text, retrieve,
                      similarity_text, tokenize)

__version__ = "0.1.0"
