import re
from dataclasses import replace

import pytest
from hypothesis import given, settings

from infostruct.discourse import BRAND_NEW, DiscourseModel, build_cf, commit_sentence, lookup_status
from infostruct.interlingua import Constituent, EntityRef, parse_document
from infostruct.knowledge import load_kb
from infostruct.linearizer import (InvariantError, Lexicon, LexiconError, LinearizedSentence,
                                   PlacementPolicy, Slot, linearize, load_lexicon, order_label,
                                   realize_gloss)
from infostruct.pipeline import plan_document
from infostruct.planner import plan_sentence

from generators import documents_with_kb

LABEL_GROUP = re.compile(r"Adv\d*|[SOV]\d*")


def labels(results):
    return [r.sentence.label for r in results]


def test_golden_labels(meeting, talk_kb):
    results, _ = plan_document(meeting, talk_kb)
    assert labels(results) == ["AdvSOV", "AdvSV", "OSV", "SV"]
    assert labels(results)[1] != "SAdvV"
    assert labels(results)[2] != "SOV"
    assert labels(results)[3] != "VS"


def test_golden_glosses(meeting, talk_kb, lexicon):
    results, _ = plan_document(meeting, talk_kb, lexicon=lexicon)
    assert [list(r.sentence.gloss) for r in results] == [
        ["Bugün", "Pat", "Chris'le", "buluşacak"],
        ["Dörtde", "bir konuşma", "var"],
        ["Konuşmayı", "Chris", "veriyor"],
        ["Pat", "gelemiyecek"],
    ]


def test_fallback_gloss(meeting, talk_kb, lexicon):
    results, _ = plan_document(meeting, talk_kb, lexicon=Lexicon())
    s = results[2].sentence
    assert list(s.gloss) == ["talk#acc", "chris#nom", "give#prog"]
    assert realize_gloss(s, lexicon) == ["Konuşmayı", "Chris", "veriyor"]


def test_long_distance_scrambling(scrambling, talk_kb, lexicon):
    results, _ = plan_document(scrambling, talk_kb, lexicon=lexicon)
    s = results[1].sentence
    assert s.label == "O2S1[S2V2]V1"
    assert list(s.gloss) == ["Konuşmayı_i", "Pat", "Chris'in", "e_i", "vereceğini", "sanıyor"]
    assert s.slots[0].extracted and s.slots[0].constituent.concept == "talk"


def test_zones_sentence_c(meeting, talk_kb):
    results, _ = plan_document(meeting, talk_kb)
    zones = [(c.concept, z) for c, z in results[2].sentence.order]
    assert zones == [("talk", "topic"), ("chris", "focus"), ("give", "verb")]


def test_order_label_verb_only():
    verb = Constituent(EntityRef("rain", index=0), "event")
    sentence = LinearizedSentence((Slot("verb", verb),))
    assert order_label(sentence) == "V"


def test_order_label_adv_s_o_v():
    cs = [Constituent(EntityRef("today", index=0), "adjunct", setting=True),
          Constituent(EntityRef("pat", index=1), "arg", "agent", position=0),
          Constituent(EntityRef("chris", index=2), "arg", "comitative", position=1),
          Constituent(EntityRef("meet", index=3), "event")]
    zones = ["topic", "focus", "focus", "verb"]
    sentence = LinearizedSentence(tuple(Slot(z, c) for z, c in zip(zones, cs)))
    assert order_label(sentence) == "AdvSOV"


def _ground_case():
    kb = load_kb("type pat agent\ntype book object\ntype read event")
    reps = parse_document("(sent (pred read (arg agent pat) (arg theme (ent book (form def)))))\n"
                          "(sent (pred read (arg agent pat) (arg theme (ent book (form def)))))")
    model = DiscourseModel()
    commit_sentence(model, reps[0], kb)
    prev = build_cf(reps[0])
    info = plan_sentence(reps[1], prev, model, kb)
    return reps[1], info, frozenset(prev.ranked)


@pytest.mark.parametrize("policy, label, dropped", [
    (PlacementPolicy("interpose"), "SOV", []),
    (PlacementPolicy("postpose"), "SVO", []),
    (PlacementPolicy("salience"), "SVO", []),
    (PlacementPolicy("salience", drop_enabled=True), "SV", ["book"]),
    (PlacementPolicy("interpose", drop_enabled=True), "SV", ["book"]),
])
def test_ground_policies(policy, label, dropped):
    rep, info, prev = _ground_case()
    s = linearize(rep, info, policy, prev)
    assert s.label == label
    assert [c.concept for c in s.dropped] == dropped
    assert all(c not in [slot.constituent for slot in s.walk()] for c in s.dropped)


def test_drop_needs_previous_mention():
    rep, info, _ = _ground_case()
    s = linearize(rep, info, PlacementPolicy("salience", drop_enabled=True), frozenset())
    assert s.label == "SVO"


def test_mark_stress_on_focused_verb(meeting, talk_kb, lexicon):
    results, _ = plan_document(meeting, talk_kb, lexicon=lexicon, mark_stress=True)
    assert results[3].sentence.gloss[-1] == "gelemiyecek*"
    rep, info, _ = _ground_case()
    assert linearize(rep, info, mark_stress=True).gloss == ("pat#nom", "book#acc", "read#verb*")
    assert linearize(rep, info).gloss[-1] == "read#verb"


def test_partition_violation(meeting, talk_kb):
    info = plan_sentence(meeting[0], None, DiscourseModel(), talk_kb)
    with pytest.raises(InvariantError):
        linearize(meeting[0], replace(info, ground=(info.topic,)))
    with pytest.raises(InvariantError):
        linearize(meeting[0], replace(info, focus=info.focus[1:]))


def test_lexicon_loading():
    lex = load_lexicon('# comment\nlex talk acc "Konuşmayı"\nlex this acc/pron "Bunu da"  # inline\n')
    assert lex.lookup("talk", "acc") == "Konuşmayı"
    assert lex.lookup("this", "acc", "pron") == "Bunu da"
    assert lex.lookup("this", "acc", "def") is None
    with pytest.raises(LexiconError):
        load_lexicon("lex talk acc")
    with pytest.raises(LexiconError):
        load_lexicon('lex talk acc "unterminated')


def test_form_specific_entry_wins(notebook, notebook_kb, lexicon):
    results, _ = plan_document(notebook, notebook_kb, lexicon=lexicon)
    assert results[1].sentence.gloss[0] == "Bunu da"
    assert "Bu defteri de" in results[0].sentence.gloss


def check_positional_contract(s):
    zones = [slot.zone for slot in s.slots]
    assert zones[0] == "topic"
    verb_at = zones.index("verb")
    assert zones.count("verb") == 1
    assert all(z == "postposed" for z in zones[verb_at + 1:])
    assert "postposed" not in zones[:verb_at]
    focus_at = [i for i, z in enumerate(zones) if z == "focus"]
    if focus_at:
        assert focus_at == list(range(focus_at[0], verb_at))


def check_label_and_gloss(s):
    slots = list(s.walk())
    assert len(LABEL_GROUP.findall(s.label)) == sum(1 for slot in slots if not slot.gap)
    assert len(s.gloss) == len(slots)


@settings(max_examples=150, deadline=None)
@given(documents_with_kb())
def test_linearizer_properties(case):
    reps, kb = case
    for policy in (PlacementPolicy(), PlacementPolicy("postpose"),
                   PlacementPolicy("salience", True)):
        model = DiscourseModel()
        prev = None
        for rep in reps:
            info = plan_sentence(rep, prev, model, kb)
            prev_realized = frozenset(prev.ranked) if prev else frozenset()
            s = linearize(rep, info, policy, prev_realized)
            check_positional_contract(s)
            check_label_and_gloss(s)
            in_focus = {slot.constituent for top in s.slots if top.zone == "focus"
                        for slot in s.walk((top,))}
            for c in info.focus + info.ground:
                if c.is_nominal and lookup_status(model, c.ref, kb) == BRAND_NEW:
                    assert c in in_focus
            commit_sentence(model, rep, kb)
            prev = build_cf(rep)
