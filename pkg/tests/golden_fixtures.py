"""Golden feature fixtures.

Each case: raw message bytes, the logical parts the parser must
produce, and the 21 expected feature values. Expected vectors were
computed by the independent scanner in oracles.py and frozen.
"""

CASES = [
    {
        "id": 'f1_zero_plain',
        "raw": b'Subject: hello world\nContent-Type: text/plain\n\nnothing here',
        "subject": 'hello world',
        "priority_raw": None,
        "content_type_raw": 'text/plain',
        "body": 'nothing here',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f1_one_letter_run',
        "raw": b'Subject: freeee offer\n\nx',
        "subject": 'freeee offer',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f1_boundary_space_run',
        "raw": b'Subject: ab   cd\n\nx',
        "subject": 'ab   cd',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f1_boundary_two_only',
        "raw": b'Subject: aabb ccdd\n\nx',
        "subject": 'aabb ccdd',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f2_two_caps',
        "raw": b'Subject: WIN BIG now\n\nx',
        "subject": 'WIN BIG now',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f2_mixed_case',
        "raw": b'Subject: Mixed CASE\n\nx',
        "subject": 'Mixed CASE',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f2_caps_with_digits',
        "raw": b'Subject: A1B2! ok\n\nx',
        "subject": 'A1B2! ok',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f2_no_letters',
        "raw": b'Subject: 123 456\n\nx',
        "subject": '123 456',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f3_boundary_15',
        "raw": b'Subject: abcdefghijklmno ok\n\nx',
        "subject": 'abcdefghijklmno ok',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f3_under_15',
        "raw": b'Subject: abcdefghijklmn ok\n\nx',
        "subject": 'abcdefghijklmn ok',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f4_counts',
        "raw": b'Subject: quiz quit jazz\n\nx',
        "subject": 'quiz quit jazz',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f5_two_tokens',
        "raw": b'Subject: gym rhythm ok\n\nx',
        "subject": 'gym rhythm ok',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f6_cases',
        "raw": b"Subject: free! f!ree fr'ee 9cat cat9\n\nx",
        "subject": "free! f!ree fr'ee 9cat cat9",
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f7_high_numeric',
        "raw": b'Subject: hi\nX-Priority: 1\n\nx',
        "subject": 'hi',
        "priority_raw": '1',
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f7_normal_numeric',
        "raw": b'Subject: hi\nX-Priority: 3\n\nx',
        "subject": 'hi',
        "priority_raw": '3',
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f7_normal_word',
        "raw": b'Subject: hi\nPriority: normal\n\nx',
        "subject": 'hi',
        "priority_raw": 'normal',
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f7_importance_high',
        "raw": b'Subject: hi\nImportance: high\n\nx',
        "subject": 'hi',
        "priority_raw": 'high',
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f7_annotated_normal',
        "raw": b'Subject: hi\nX-Priority: 3 (Normal)\n\nx',
        "subject": 'hi',
        "priority_raw": '3 (Normal)',
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f7_preference_xpriority',
        "raw": b'Subject: hi\nPriority: high\nX-Priority: 3\n\nx',
        "subject": 'hi',
        "priority_raw": '3',
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f7_preference_priority',
        "raw": b'Subject: hi\nImportance: normal\nPriority: urgent\n\nx',
        "subject": 'hi',
        "priority_raw": 'urgent',
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f8_absent',
        "raw": b'Subject: hi\n\nx',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f8_html',
        "raw": b'Subject: hi\nContent-Type: text/html\n\nx',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": 'text/html',
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f8_html_upper_params',
        "raw": b'Subject: hi\nContent-Type: TEXT/HTML; charset=utf-8\n\nx',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": 'text/html',
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f8_plain',
        "raw": b'Subject: hi\nContent-Type: text/plain; charset=us-ascii\n\nx',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": 'text/plain',
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f8_multipart',
        "raw": b'Subject: hi\nContent-Type: multipart/mixed; boundary=b\n\nx',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": 'multipart/mixed',
        "body": 'x',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f9_quarter',
        "raw": b'Subject: hi\n\nstrength rhythms xyz ok',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'strength rhythms xyz ok',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.25, 0.25, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f9_boundary_len6',
        "raw": b'Subject: hi\n\nrhythm ok',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'rhythm ok',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f10_singles_dont_count',
        "raw": b'Subject: hi\n\njam jar',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'jam jar',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f11_half',
        "raw": b'Subject: hi\n\nsupercalifragilisticexpialidocious nice',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'supercalifragilisticexpialidocious nice',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f11_boundary_15',
        "raw": b'Subject: hi\n\nabcdefghijklmno abcdefghijklmn',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'abcdefghijklmno abcdefghijklmn',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'props_empty_words',
        "raw": b'Subject: hi\n\n123 456 +!',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '123 456 +!',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f12_both',
        "raw": b'Subject: hi\n\nFrom: a@b\nTo: c@d\nhello',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'From: a@b\nTo: c@d\nhello',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f12_case_sensitive',
        "raw": b'Subject: hi\n\nfrom: a@b to: c@d',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'from: a@b to: c@d',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f12_only_from',
        "raw": b'Subject: hi\n\nFrom: a@b says hello',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'From: a@b says hello',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f13_two',
        "raw": b'Subject: hi\n\n<!-- x --><!-- y -->',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<!-- x --><!-- y -->',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f13_partial',
        "raw": b'Subject: hi\n\n<!- no comment',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<!- no comment',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f14_clean_link',
        "raw": b'Subject: hi\n\n<a href="http://example.com/">x</a>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<a href="http://example.com/">x</a>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f17_unquoted_digits',
        "raw": b'Subject: hi\n\n<a href=http://ex.com/a?b=1&c=2>y</a>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<a href=http://ex.com/a?b=1&c=2>y</a>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f17_mailto_at',
        "raw": b'Subject: hi\n\n<a href="mailto:x@y.example">m</a>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<a href="mailto:x@y.example">m</a>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f17_percent',
        "raw": b'Subject: hi\n\nsee <a href="%20foo">p</a> and <a href="plain/path">q</a>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'see <a href="%20foo">p</a> and <a href="plain/path">q</a>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f15_two_inside_one_out',
        "raw": b'Subject: hi\n\n<a href="u"><img src="a"><img src="b"></a><img src="c">',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<a href="u"><img src="a"><img src="b"></a><img src="c">',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f15_unmatched_open',
        "raw": b'Subject: hi\n\n<a><img><p><img>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<a><img><p><img>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f15_abbr_not_anchor',
        "raw": b'Subject: hi\n\n<abbr><img></abbr>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<abbr><img></abbr>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f15_img_before_anchor',
        "raw": b'Subject: hi\n\n<img><a>text</a>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<img><a>text</a>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f16_white_word',
        "raw": b'Subject: hi\n\n<font color="white">x</font>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<font color="white">x</font>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f16_hex_upper',
        "raw": b'Subject: hi\n\n<font color="#FFFFFF">x</font>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<font color="#FFFFFF">x</font>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f16_css_fff',
        "raw": b'Subject: hi\n\n<p style="color: #fff">x</p>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<p style="color: #fff">x</p>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0],
    },
    {
        "id": 'f16_bgcolor_excluded',
        "raw": b'Subject: hi\n\n<body bgcolor="white">',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<body bgcolor="white">',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f16_whitesmoke_not_white',
        "raw": b'Subject: hi\n\n<font color="whitesmoke">x</font>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<font color="whitesmoke">x</font>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f16_rgb_spaces',
        "raw": b"Subject: hi\n\n<p style='color: rgb( 255, 255 , 255 )'>x</p>",
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": "<p style='color: rgb( 255, 255 , 255 )'>x</p>",
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0],
    },
    {
        "id": 'f16_text_attr_unquoted',
        "raw": b'Subject: hi\n\n<body text=#ffffff>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<body text=#ffffff>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f18_seven',
        "raw": b'Subject: hi\n\n<body bgcolor="#000" text="#111" link="#222" vlink="#333" alink="#444"><p style="background-color: red; color: blue">x</p>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<body bgcolor="#000" text="#111" link="#222" vlink="#333" alink="#444"><p style="background-color: red; color: blue">x</p>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 7.0, 0.0, 1.0, 0.0],
    },
    {
        "id": 'f19_script_tag',
        "raw": b'Subject: hi\n\n<script>alert(1)</script>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<script>alert(1)</script>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0],
    },
    {
        "id": 'f19_js_scheme_upper',
        "raw": b'Subject: hi\n\n<a href="JAVASCRIPT:void(0)">x</a>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<a href="JAVASCRIPT:void(0)">x</a>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0],
    },
    {
        "id": 'f19_negative',
        "raw": b'Subject: hi\n\njavascripting fun',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'javascripting fun',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f20_style_tag',
        "raw": b'Subject: hi\n\n<style>p{}</style>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<style>p{}</style>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0],
    },
    {
        "id": 'f20_stylesheet_unquoted',
        "raw": b'Subject: hi\n\n<link rel=stylesheet href="x.css">',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<link rel=stylesheet href="x.css">',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0],
    },
    {
        "id": 'f20_negative',
        "raw": b'Subject: hi\n\nstylish text',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'stylish text',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'f21_table',
        "raw": b'Subject: hi\n\n<table border="1"><tr><td>x</td></tr></table>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<table border="1"><tr><td>x</td></tr></table>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    },
    {
        "id": 'f21_negative',
        "raw": b'Subject: hi\n\n<tab>',
        "subject": 'hi',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '<tab>',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'fold_subject',
        "raw": b'Subject: free\n offer!!!\n\nx',
        "subject": 'free offer!!!',
        "priority_raw": None,
        "content_type_raw": None,
        "body": 'x',
        "expected": [1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'all_zero_but_f8',
        "raw": b'X-Mailer: fixture\n\n',
        "subject": '',
        "priority_raw": None,
        "content_type_raw": None,
        "body": '',
        "expected": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
    {
        "id": 'spam_kitchen_sink',
        "raw": b'Subject: FREEEE $$$ kqzx WIN unbelievablediscountoffer\nX-Priority: 1\nContent-Type: text/html\n\n<!-- promo --><table bgcolor="#ffcc00"><tr><td><a href="http://win7.example.com/go?id=99&u=2"><img src="b.gif"></a><font color="#ffffff">xzkqjqx jqxzbkq wins</font><script>go()</script><p style="color:red">now</p>From: friend To: you</td></tr></table>',
        "subject": 'FREEEE $$$ kqzx WIN unbelievablediscountoffer',
        "priority_raw": '1',
        "content_type_raw": 'text/html',
        "body": '<!-- promo --><table bgcolor="#ffcc00"><tr><td><a href="http://win7.example.com/go?id=99&u=2"><img src="b.gif"></a><font color="#ffffff">xzkqjqx jqxzbkq wins</font><script>go()</script><p style="color:red">now</p>From: friend To: you</td></tr></table>',
        "expected": [1.0, 2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.3333333333333333, 0.3333333333333333, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 1.0, 1.0, 1.0],
    },
    {
        "id": 'ham_kitchen_sink',
        "raw": b'Subject: RE: meeting notes\nContent-Type: text/plain\nX-Priority: 3\n\nthanks for the notes\nFrom: archive To: list\nsee https://example.org/wiki',
        "subject": 'RE: meeting notes',
        "priority_raw": '3',
        "content_type_raw": 'text/plain',
        "body": 'thanks for the notes\nFrom: archive To: list\nsee https://example.org/wiki',
        "expected": [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
]
