import pytest

from unilink.braid import (BraidWord, blackboard_framings, closure_components, link_data,
                           linking_matrix, markov_moves, parse_descriptor, stabilize)


@pytest.mark.parametrize("strands, word, count", [(2, (1, 1, 1), 1), (3, (), 3), (2, (1, 1), 2),
                                                  (3, (1, -2, 1, -2), 1), (3, (1, 1, 2, 2), 3)])
def test_component_count(strands, word, count):
    assert closure_components(BraidWord(strands, word))[0] == count


def test_linking_numbers():
    assert linking_matrix(BraidWord(2, (1, 1))) == ((0, 1), (1, 0))
    assert linking_matrix(BraidWord(2, (-1, -1))) == ((0, -1), (-1, 0))
    assert linking_matrix(BraidWord(2, (1, 1, 1))) == ((0,),)


def test_blackboard_framings():
    assert blackboard_framings(BraidWord(2, (1, 1, 1))) == (3,)
    assert blackboard_framings(BraidWord(2, (1, 1))) == (0, 0)
    assert blackboard_framings(BraidWord(3)) == (0, 0, 0)


@pytest.mark.parametrize("word, strands", [((1, 1, 1), 2), ((1, 1), 2), ((1, -2, 1, -2), 3),
                                           ((1, 1, 2, 2), 3), ((1, 2, -1, 2), 3)])
def test_writhe_decomposes(word, strands):
    b = BraidWord(strands, word)
    link = link_data(b)
    total = sum(link.framings[i] + sum(link.lk[i][j] for j in range(link.components) if j != i)
                for i in range(link.components))
    assert total == b.writhe()


def test_stabilization_and_conjugation():
    assert stabilize(BraidWord(2, (1,))) == BraidWord(3, (1, 2))
    assert stabilize(BraidWord(1)) == BraidWord(2, (1,))
    assert BraidWord(2, (1, 1, 1, 1, -1)).reduced() == BraidWord(2, (1, 1, 1))


@pytest.mark.parametrize("word, strands", [((1, 1, 1), 2), ((1, 1), 2), ((1, 1, 2, 2), 3)])
def test_markov_moves_preserve_closure_data(word, strands):
    b = BraidWord(strands, word)
    base = link_data(b)
    for moved in markov_moves(b):
        m = link_data(moved)
        assert m.components == base.components
        assert sorted(v for row in m.lk for v in row) == sorted(v for row in base.lk for v in row)


def test_parse():
    assert BraidWord.parse("1 -2 1 -2") == BraidWord(3, (1, -2, 1, -2))
    assert BraidWord.parse("", 1) == BraidWord(1)
    with pytest.raises(ValueError):
        BraidWord.parse("1 a")
    b, fr, name = parse_descriptor('{"strands": 2, "word": [1, 1], "framings": [1, -1], "name": "hopf"}')
    assert b == BraidWord(2, (1, 1)) and fr == (1, -1) and name == "hopf"


def test_generator_out_of_range():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))


def test_framing_override():
    assert link_data(BraidWord(2, (1, 1, 1)), [0]).framings == (0,)
    with pytest.raises(ValueError):
        link_data(BraidWord(2, (1, 1)), [0])
