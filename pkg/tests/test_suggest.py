import random

import pytest

from wolofspell.alphabet import WOLOF_CHARS
from wolofspell.distance import weighted_levenshtein
from wolofspell.lexicon import TrieDict
from wolofspell.suggest import EmptyLexiconError, Suggestion, best, suggest

ALPHABET = sorted(WOLOF_CHARS)


def linear_scan(query, words, model, k, max_cost=None):
    """The reference: score every word, stable-sort by (cost, word), cut at k."""
    scored = sorted((weighted_levenshtein(query, w, model), w) for w in words)
    if max_cost is not None:
        scored = [(c, w) for c, w in scored if c <= max_cost]
    return [(w, c) for c, w in scored[:k]]


def mutations(words, rng, count, max_edits=3):
    out = []
    for _ in range(count):
        chars = list(rng.choice(words))
        for _ in range(rng.randint(0, max_edits)):
            op = rng.choice("ids")
            if op == "i" or not chars:
                chars.insert(rng.randrange(len(chars) + 1), rng.choice(ALPHABET))
            elif op == "d" and len(chars) > 1:
                del chars[rng.randrange(len(chars))]
            else:
                chars[rng.randrange(len(chars))] = rng.choice(ALPHABET)
        out.append("".join(chars))
    return out


class TestSuggest:
    def test_three_word_dictionary(self, model):
        trie = TrieDict.from_words(["tànk", "taal", "ñaar"])
        result = suggest("tank", trie, model, k=3)
        assert [(s.word, s.cost) for s in result.items] == [
            ("tànk", 1), ("taal", 4), ("ñaar", 6)]

    def test_exact_match_ranks_first_at_zero(self, sample_lexicon, model,
                                             sample_words):
        rng = random.Random(79)
        for word in rng.sample(sample_words, 20):
            result = suggest(word, sample_lexicon, model, k=5)
            assert result.items[0] == Suggestion(word, 0)

    def test_matches_linear_scan(self, sample_lexicon, sample_words, model):
        rng = random.Random(83)
        for query in mutations(sample_words, rng, 100):
            expected = linear_scan(query, sample_words, model, k=10)
            got = suggest(query, sample_lexicon, model, k=10)
            assert [(s.word, s.cost) for s in got.items] == expected, query

    def test_ties_break_lexicographically(self, model):
        trie = TrieDict.from_words(["bak", "dak", "cak"])
        result = suggest("tak", trie, model, k=3)
        assert [s.word for s in result.items] == ["bak", "cak", "dak"]
        assert len({s.cost for s in result.items}) == 1

    def test_k_list_is_prefix_of_k_plus_one_list(self, sample_lexicon,
                                                 sample_words, model):
        rng = random.Random(89)
        for query in mutations(sample_words, rng, 30):
            lists = {k: suggest(query, sample_lexicon, model, k=k).items
                     for k in (1, 5, 6, 10)}
            assert lists[5] == lists[6][:5]
            assert lists[1] == lists[10][:1]

    def test_max_cost_filters(self, sample_lexicon, sample_words, model):
        rng = random.Random(97)
        for query in mutations(sample_words, rng, 30):
            expected = linear_scan(query, sample_words, model, k=10, max_cost=2)
            got = suggest(query, sample_lexicon, model, k=10, max_cost=2)
            assert [(s.word, s.cost) for s in got.items] == expected

    def test_max_cost_zero_keeps_exact_match_only(self, sample_lexicon, model):
        result = suggest("dëkk", sample_lexicon, model, k=5, max_cost=0)
        assert [(s.word, s.cost) for s in result.items] == [("dëkk", 0)]

    def test_no_duplicate_words(self, sample_lexicon, sample_words, model):
        rng = random.Random(101)
        for query in mutations(sample_words, rng, 30):
            words = suggest(query, sample_lexicon, model, k=10).words()
            assert len(words) == len(set(words))

    def test_deterministic(self, sample_lexicon, model):
        first = suggest("deuk", sample_lexicon, model, k=10)
        second = suggest("deuk", sample_lexicon, model, k=10)
        assert first.items == second.items

    def test_empty_lexicon_raises(self, model):
        with pytest.raises(EmptyLexiconError):
            suggest("dëkk", TrieDict(), model)

    def test_empty_query_rejected(self, sample_lexicon, model):
        with pytest.raises(ValueError):
            suggest("", sample_lexicon, model)

    def test_rank_of(self, sample_lexicon, model):
        result = suggest("deuk", sample_lexicon, model, k=10)
        assert result.rank_of(result.items[0].word) == 1
        assert result.rank_of("not-a-word") is None


class TestPruning:
    def test_pruning_never_changes_results(self, sample_lexicon, sample_words,
                                           model):
        rng = random.Random(103)
        for query in mutations(sample_words, rng, 60):
            for k in (1, 5, 10):
                pruned = suggest(query, sample_lexicon, model, k=k)
                full = suggest(query, sample_lexicon, model, k=k, prune=False)
                assert pruned.items == full.items, (query, k)

    def test_pruned_walk_expands_fewer_nodes(self, sample_lexicon,
                                             sample_words, model):
        rng = random.Random(107)
        total_nodes = sample_lexicon.node_count()
        for query in mutations(sample_words, rng, 30):
            pruned = suggest(query, sample_lexicon, model, k=1)
            full = suggest(query, sample_lexicon, model, k=1, prune=False)
            assert full.nodes_expanded == total_nodes
            assert pruned.nodes_expanded < full.nodes_expanded


class TestBest:
    def test_single_member(self, model):
        trie = TrieDict.from_words(["tànk"])
        assert best("tank", trie, model) == Suggestion("tànk", 1)

    def test_member_query_costs_zero(self, sample_lexicon, model):
        assert best("dëkk", sample_lexicon, model) == Suggestion("dëkk", 0)

    def test_equals_first_of_suggest(self, sample_lexicon, sample_words, model):
        rng = random.Random(109)
        for query in mutations(sample_words, rng, 20):
            assert best(query, sample_lexicon, model) == \
                suggest(query, sample_lexicon, model, k=1).items[0]
