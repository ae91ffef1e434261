# Copyright 2026 The t2t3 Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python extension module."""

import xml.dom.minidom

import pytest

import t2t3

TUESDAY = '<TIMEX2 VAL="2012-03-20">The Tuesday after the party</TIMEX2>'


def element_names(xml_text):
    # The standard library parser is the well-formedness oracle here.
    dom = xml.dom.minidom.parseString(xml_text.encode("utf-8"))
    names = []

    def walk(node):
        for child in node.childNodes:
            if child.nodeType == child.ELEMENT_NODE:
                names.append(child.tagName)
                walk(child)

    walk(dom.documentElement)
    return names


def test_convert_signalled_example():
    out = t2t3.convert(TUESDAY)
    assert element_names(out) == ["TIMEX3", "SIGNAL", "EVENT", "TLINK"]
    assert 'relType="AFTER"' in out


def test_convert_document_reports_paths():
    doc = t2t3.parse_inline(
        'before <TIMEX2 VAL="1999-W23">the week of <TIMEX2 VAL="1999-06-07">'
        "the seventh</TIMEX2></TIMEX2>"
    )
    assert doc.count_timex2() == 2
    timeml, report = t2t3.convert_document(doc)
    assert report["paths"]["nested"] == 1
    assert report["timex3"] == 2
    assert [t.value for t in timeml.timex3s] == ["1999-W23", "1999-06-07"]
    assert t2t3.validate(timeml) == []


def test_untyped_option():
    out = t2t3.convert(TUESDAY, untyped_tlinks=True)
    assert "relType" not in out
    element_names(out)


def test_round_trip_and_validation():
    xml_text = t2t3.convert("AT&amp;T said <TIMEX2 VAL=\"2001\">2001</TIMEX2> &lt;ok&gt;")
    doc = t2t3.parse_timeml(xml_text)
    assert doc.text == "AT&T said 2001 <ok>"
    assert t2t3.serialize(doc) == xml_text
    assert t2t3.validate_serialized(xml_text) == []
    codes = [v[0] for v in t2t3.validate_serialized("<TimeML><TIMEX3></TimeML>")]
    assert codes == ["MALFORMED_XML"]


def test_errors_carry_kind():
    with pytest.raises(t2t3.Error) as info:
        t2t3.parse_inline("<TIMEX2 VAL=\"1\">open")
    assert info.value.kind == "MalformedMarkup"
    with pytest.raises(t2t3.Error) as info:
        t2t3.normalize_encoding(b"")
    assert info.value.kind == "EmptyInput"


def test_scores():
    gold = t2t3.TimeMLDocument()
    gold.text = "We meet next Thursday ."
    t = t2t3.Timex3()
    t.span = t2t3.Span(8, 21)
    t.value = "x"
    gold.timex3s = [t]
    sys_doc = t2t3.TimeMLDocument()
    sys_doc.text = gold.text
    s = t2t3.Timex3()
    s.span = t2t3.Span(13, 21)
    s.value = "x"
    sys_doc.timex3s = [s]
    assert t2t3.score_entity(gold, sys_doc)["f1"] == 0
    token = t2t3.score_token(gold, sys_doc)
    assert token["precision"] == pytest.approx(1.0)
    assert token["recall"] == pytest.approx(0.5)
    assert token["f1"] == pytest.approx(2 / 3)


def test_infer_type():
    assert t2t3.infer_type("P90D") == "DURATION"
    assert t2t3.infer_type("1999-W23") == "DATE"
    assert t2t3.infer_type("XXXX-WXX-2", True) == "SET"
