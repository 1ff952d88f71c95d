import pytest

from zhbraille.errors import MalformedSyllableError
from zhbraille.pinyin import PinyinSyllable, parse_pinyin


@pytest.mark.parametrize("token,expected", [
    ("zhong1", ("zh", "ong", 1)),
    ("ba3", ("b", "a", 3)),
    ("de5", ("d", "e", 5)),
    ("de", ("d", "e", 5)),          # missing digit means neutral
    ("er2", ("", "er", 2)),
    ("an4", ("", "an", 4)),
    ("yi1", ("", "i", 1)),
    ("ya2", ("", "ia", 2)),
    ("ye4", ("", "ie", 4)),
    ("yao4", ("", "iao", 4)),
    ("you3", ("", "iu", 3)),
    ("yan2", ("", "ian", 2)),
    ("yin1", ("", "in", 1)),
    ("ying2", ("", "ing", 2)),
    ("yang2", ("", "iang", 2)),
    ("yong3", ("", "iong", 3)),
    ("yu2", ("", "v", 2)),
    ("yue4", ("", "ve", 4)),
    ("yuan2", ("", "van", 2)),
    ("yun2", ("", "vn", 2)),
    ("wu3", ("", "u", 3)),
    ("wa1", ("", "ua", 1)),
    ("wo3", ("", "uo", 3)),
    ("wai4", ("", "uai", 4)),
    ("wei4", ("", "ui", 4)),
    ("wan2", ("", "uan", 2)),
    ("wen2", ("", "un", 2)),
    ("wang2", ("", "uang", 2)),
    ("weng1", ("", "ueng", 1)),
    ("ju2", ("j", "v", 2)),
    ("que4", ("q", "ve", 4)),
    ("xuan3", ("x", "van", 3)),
    ("jun1", ("j", "vn", 1)),
    ("jiu4", ("j", "iu", 4)),
    ("lv4", ("l", "v", 4)),
    ("lüe4", ("l", "ve", 4)),
    ("nu:3", ("n", "v", 3)),
    ("dui4", ("d", "ui", 4)),
    ("dun4", ("d", "un", 4)),
    ("zhi1", ("zh", "i", 1)),
    ("si4", ("s", "i", 4)),
    ("er5", ("", "er", 5)),
])
def test_parse_pinyin(token, expected):
    s = parse_pinyin(token)
    assert (s.initial, s.final, s.tone) == expected


@pytest.mark.parametrize("token", ["", "q1", "yo1", "ng2", "zhong6", "xyz1", "b2"])
def test_parse_rejects_malformed(token):
    with pytest.raises(MalformedSyllableError):
        parse_pinyin(token)


def test_syllable_validation():
    with pytest.raises(MalformedSyllableError):
        PinyinSyllable("w", "a", 1)
    with pytest.raises(MalformedSyllableError):
        PinyinSyllable("b", "xx", 1)
    with pytest.raises(MalformedSyllableError):
        PinyinSyllable("b", "a", 0)


def test_toneless_and_retone():
    s = parse_pinyin("ma1")
    assert s.toneless == ("m", "a")
    assert s.with_tone(3) == PinyinSyllable("m", "a", 3)
    assert str(s) == "ma1"
