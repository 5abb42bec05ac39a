#!/usr/bin/env python3
"""Generates the bundled mini-corpus (data/mini_corpus.tsv).

Sentences are built from a small lexicon and templates, with eojeol surfaces
derived at the jamo level so that fused syllables (갔, 했, 간다, 갑니다, ...)
are realized the way an analyzer would report them. Output is the tagged TSV
format read by `hanpiece` (MeCab-ko style lines, <SP> between eojeols, EOS
after each sentence). The output is deterministic for a given seed.

    python3 tools/make_mini_corpus.py --sentences 6000 > data/mini_corpus.tsv
"""

import argparse
import random
import sys
import unicodedata

NOUNS = """
학교 사람 친구 가족 선생님 학생 회사 집 방 책 책상 의자 컴퓨터 전화 음식 밥 물 커피
우유 빵 사과 바다 하늘 산 강 길 도시 나라 시장 공원 병원 은행 식당 도서관 영화 음악
노래 그림 사진 편지 신문 잡지 소설 시간 오늘 내일 어제 아침 점심 저녁 주말 여름 겨울
봄 가을 날씨 바람 비 눈 꽃 나무 고양이 강아지 자동차 버스 기차 비행기 자전거 문제 질문
대답 이야기 생각 마음 사랑 행복 꿈 일 공부 운동 여행 숙제 시험 수업 회의 계획 약속
경제 정치 사회 문화 역사 과학 기술 교육 환경 정부 시민 국민 대학 연구 결과 방법 이유
세계 지역 지도 언어 한국어 영어 단어 문장 의미 소리 얼굴 손 발 눈물 웃음 목소리 옷
신발 가방 모자 우산 열쇠 창문 거울 침대 부엌 화장실 건물 교실 운동장 정원 마을 해물
라면 김치 불고기 비빔밥 떡 과일 야채 고기 생선 계란 설탕 소금 기름 그릇 숟가락 젓가락
""".split()

PROPER = """
서울 부산 대구 인천 광주 대전 제주 한강 민수 지영 철수 영희 수진 현우 서연 도윤 하은
지호 민준 서준 유나 태양 은비 준영 소희 다은
""".split()

PRONOUNS = ["나", "너", "그", "우리", "저", "그녀", "누구"]

ADVERBS = """
정말 아주 매우 빨리 천천히 같이 다시 오늘 어제 지금 항상 자주 가끔 벌써 아직 조금 많이
너무 잘 함께 먼저 나중 곧 이미 특히 모두
""".split()

DETERMINERS = ["이", "그", "저", "새", "모든", "여러", "다른"]

# Verb stems that end in a consonant.
VERBS_CONS = ["먹", "읽", "찾", "만들", "살", "앉", "입", "닫", "열", "잡", "받", "웃",
              "씻", "알", "놀", "팔", "믿", "남", "넘", "심", "신", "접", "찍"]
# Verb stems ending in ㅏ / ㅓ / ㅣ, whose past forms contract.
VERBS_VOWEL = ["가", "사", "자", "타", "만나", "나", "서", "건너", "일어서",
               "가르치", "마시", "기다리", "다니", "버리", "그리", "지내", "밝히"]
ADJ_CONS = ["좋", "많", "작", "높", "넓", "맑", "밝", "깊", "짧", "낮", "싫", "같", "괜찮"]
ADJ_VOWEL = ["착하", "예쁘", "바쁘", "아프", "기쁘", "슬프", "조용하", "따뜻하", "시원하"]

SYNTH_SYLLABLES = """
가 나 다 라 마 바 사 아 자 차 카 타 파 하 고 노 도 로 모 보 소 오 조 초 코 토 포 호 구 누
두 루 무 부 수 우 주 추 쿠 투 푸 후 기 니 디 리 미 비 시 이 지 치 키 티 피 히 강 남 동 량
명 방 상 영 장 청 탕 평 항 건 던 런 먼 번 선 언 전 천 헌 길 닐 딜 릴 밀 빌 실 일 질 칠 각
낙 덕 락 막 박 석 악 작 착 탁 학 결 널 덜 멀 벌 설 얼 절 철 털 펄 헐 곰 금 놈 담 림 봄 셈
""".split()


def nfd(s):
    return unicodedata.normalize("NFD", s)


def nfc(s):
    return unicodedata.normalize("NFC", s)


def has_trail(word):
    last = nfd(word)[-1]
    return "ᆨ" <= last <= "ᇂ"


def trail_is(word, trail):
    return nfd(word)[-1] == trail


def last_vowel(word):
    for ch in reversed(nfd(word)):
        if "ᅡ" <= ch <= "ᅵ":
            return ch
    return None


class Morph:
    """A morpheme with its canonical form and the jamo it realizes."""

    def __init__(self, canonical, tag, fragment=None):
        self.canonical = canonical
        self.tag = tag
        self.fragment = nfd(canonical) if fragment is None else fragment


def particle(noun, with_cons, without_cons, tag):
    return Morph(with_cons if has_trail(noun) else without_cons, tag)


def nominal(noun, tag, kind):
    morphs = [Morph(noun, tag)]
    if kind == "subj":
        morphs.append(particle(noun, "이", "가", "JKS"))
    elif kind == "topic":
        morphs.append(particle(noun, "은", "는", "JX"))
    elif kind == "obj":
        morphs.append(particle(noun, "을", "를", "JKO"))
    elif kind == "loc":
        morphs.append(Morph("에", "JKB"))
    elif kind == "at":
        morphs.append(Morph("에서", "JKB"))
    elif kind == "gen":
        morphs.append(Morph("의", "JKG"))
    elif kind == "with":
        morphs.append(particle(noun, "과", "와", "JC"))
    elif kind == "also":
        morphs.append(Morph("도", "JX"))
    elif kind == "to":
        if has_trail(noun) and not trail_is(noun, "ᆯ"):
            morphs.append(Morph("으로", "JKB"))
        else:
            morphs.append(Morph("로", "JKB"))
    elif kind == "dat":
        morphs.append(Morph("에게", "JKB"))
    elif kind == "only":
        morphs.append(Morph("만", "JX"))
    return morphs


def past(stem, tag):
    """Stem + past-tense marker, contracting where the stem allows it."""
    j = nfd(stem)
    if stem.endswith("하"):
        # 하 + 였 → 했
        return [Morph(stem, tag, j[:-1] + "ᅢ"), Morph("였", "EP", "ᆻ")]
    v = last_vowel(stem)
    marker = "았" if v in ("ᅡ", "ᅩ") else "었"
    if has_trail(stem):
        return [Morph(stem, tag), Morph(marker, "EP")]
    if j[-1] == "ᅡ" and marker == "았":
        return [Morph(stem, tag), Morph(marker, "EP", "ᆻ")]
    if j[-1] == "ᅥ" and marker == "었":
        return [Morph(stem, tag), Morph(marker, "EP", "ᆻ")]
    if j[-1] == "ᅵ" and marker == "었":
        return [Morph(stem, tag, j[:-1] + "ᅧ"), Morph(marker, "EP", "ᆻ")]
    return None


def predicate(rng, stem, tag, style):
    """Returns morphemes for a sentence-final or connective predicate."""
    cons = has_trail(stem)
    if trail_is(stem, "ᆯ") and style in ("plain", "formal") and tag == "VV":
        return None  # ㄹ-deletion (산다, 삽니다)
    if style == "past":
        morphs = past(stem, tag)
        if morphs is None:
            return None
        ending = rng.choice([("다", "EF"), ("다", "EF"), ("습니다", "EF")])
        return morphs + [Morph(*ending)]
    if style == "plain":
        if tag == "VA":
            return [Morph(stem, tag), Morph("다", "EF")]
        if cons:
            return [Morph(stem, tag), Morph("는다", "EF")]
        # 가 + ㄴ다 → 간다
        return [Morph(stem, tag), Morph("ㄴ다", "EF", "ᆫ" + nfd("다"))]
    if style == "formal":
        if cons:
            return [Morph(stem, tag), Morph("습니다", "EF")]
        # 가 + ㅂ니다 → 갑니다
        return [Morph(stem, tag), Morph("ㅂ니다", "EF", "ᆸ" + nfd("니다"))]
    if style == "conn":
        return [Morph(stem, tag), Morph(rng.choice(["고", "지만"]), "EC")]
    raise ValueError(style)


def adnominal(rng, stem, tag):
    if trail_is(stem, "ᆯ"):
        return None  # ㄹ-deletion is out of the generator's reach
    if tag == "VV" and rng.random() < 0.5:
        return [Morph(stem, tag), Morph("는", "ETM")]
    if has_trail(stem):
        return [Morph(stem, tag), Morph("은", "ETM")]
    return [Morph(stem, tag), Morph("ㄴ", "ETM", "ᆫ")]


def copula(rng, noun):
    if has_trail(noun) or rng.random() < 0.5:
        return [Morph(noun, "NNG"), Morph("이", "VCP"), Morph("다", "EF")]
    # Copula dropped after a vowel: 학교다. The analyzer still reports 이.
    return [Morph(noun, "NNG"), Morph("이", "VCP", ""), Morph("다", "EF")]


class Lexicon:
    def __init__(self, rng, synthetic):
        self.rng = rng
        seen = set(NOUNS)
        self.synth = []
        while len(self.synth) < synthetic:
            n = rng.choice([2, 2, 3])
            word = "".join(rng.choice(SYNTH_SYLLABLES) for _ in range(n))
            if word not in seen:
                seen.add(word)
                self.synth.append(word)
        self.nouns = NOUNS + self.synth
        # Zipf-like weights so a few nouns dominate.
        self.weights = [1.0 / (i + 1) ** 0.9 for i in range(len(self.nouns))]

    def noun(self):
        return self.rng.choices(self.nouns, weights=self.weights)[0]

    def proper(self):
        return self.rng.choice(PROPER)

    def subject(self):
        r = self.rng.random()
        if r < 0.25:
            return self.rng.choice(PRONOUNS), "NP"
        if r < 0.4:
            return self.proper(), "NNP"
        return self.noun(), "NNG"

    def verb(self):
        return self.rng.choice(VERBS_CONS + VERBS_VOWEL), "VV"

    def adjective(self):
        return self.rng.choice(ADJ_CONS + ADJ_VOWEL), "VA"


def sentence(rng, lex):
    eojeols = []
    t = rng.randrange(7)
    if t == 0:
        s, tag = lex.subject()
        eojeols.append(nominal(s, tag, "topic"))
        eojeols.append(nominal(lex.noun(), "NNG", "obj"))
        v, vt = lex.verb()
        eojeols.append(predicate(rng, v, vt, rng.choice(["past", "plain", "formal"])))
    elif t == 1:
        eojeols.append([Morph(rng.choice(ADVERBS), "MAG")])
        s, tag = lex.subject()
        eojeols.append(nominal(s, tag, "subj"))
        eojeols.append(nominal(lex.noun(), "NNG", rng.choice(["loc", "to", "at"])))
        v, vt = lex.verb()
        eojeols.append(predicate(rng, v, vt, rng.choice(["past", "plain"])))
    elif t == 2:
        a, at = lex.adjective()
        eojeols.append(adnominal(rng, a, at))
        eojeols.append(nominal(lex.noun(), "NNG", "topic"))
        eojeols.append(copula(rng, lex.noun()))
    elif t == 3:
        s, tag = lex.subject()
        eojeols.append(nominal(s, tag, "subj"))
        eojeols.append(nominal(lex.noun(), "NNG", "obj"))
        v, vt = lex.verb()
        eojeols.append(predicate(rng, v, vt, "conn"))
        eojeols.append(nominal(lex.noun(), "NNG", "obj"))
        v, vt = lex.verb()
        eojeols.append(predicate(rng, v, vt, rng.choice(["past", "formal"])))
    elif t == 4:
        eojeols.append(nominal(lex.noun(), "NNG", "loc"))
        eojeols.append(nominal(lex.proper(), "NNP", "with"))
        eojeols.append(nominal(lex.noun(), "NNG", "at"))
        v, vt = lex.verb()
        eojeols.append(predicate(rng, v, vt, "past"))
    elif t == 5:
        eojeols.append([Morph(rng.choice(DETERMINERS), "MM")])
        eojeols.append(nominal(lex.noun(), "NNG", rng.choice(["topic", "also", "only"])))
        a, at = lex.adjective()
        eojeols.append(predicate(rng, a, at, rng.choice(["plain", "past"])))
    else:
        s, tag = lex.subject()
        eojeols.append(nominal(s, tag, "topic"))
        eojeols.append(nominal(lex.proper(), "NNP", "dat"))
        eojeols.append(nominal(lex.noun(), "NNG", "gen"))
        eojeols.append(nominal(lex.noun(), "NNG", "obj"))
        v, vt = lex.verb()
        eojeols.append(predicate(rng, v, vt, rng.choice(["past", "formal"])))
    if any(e is None for e in eojeols):
        return None
    eojeols[-1].append(Morph(rng.choice([".", ".", ".", "!"]), "SF"))
    return eojeols


def lines_for_eojeol(morphs):
    """Groups morphemes into analyzer lines; a line ends at syllable edges."""
    groups = [[morphs[0]]]
    for prev, m in zip(morphs, morphs[1:]):
        starts_syllable = m.fragment and "ᄀ" <= m.fragment[0] <= "ᄒ"
        if prev.fragment and starts_syllable or m.tag == "SF":
            groups.append([m])
        else:
            groups[-1].append(m)
    out = []
    for g in groups:
        surface = nfc("".join(m.fragment for m in g))
        if len(g) == 1 and nfc(g[0].fragment) == g[0].canonical:
            m = g[0]
            out.append(f"{surface}\t{m.tag},*,*,{m.canonical},*,*,*,*")
        else:
            tags = "+".join(m.tag for m in g)
            expr = "+".join(f"{m.canonical}/{m.tag}/*" for m in g)
            out.append(f"{surface}\t{tags},*,*,{surface},Inflect,{g[0].tag},{g[-1].tag},{expr}")
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sentences", type=int, default=6000)
    parser.add_argument("--synthetic-nouns", type=int, default=1500)
    parser.add_argument("--seed", type=int, default=20231017)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    lex = Lexicon(rng, args.synthetic_nouns)
    out = sys.stdout
    written = 0
    while written < args.sentences:
        s = sentence(rng, lex)
        if s is None:
            continue
        for i, morphs in enumerate(s):
            if i > 0:
                out.write("<SP>\n")
            for line in lines_for_eojeol(morphs):
                out.write(line + "\n")
        out.write("EOS\n")
        written += 1


if __name__ == "__main__":
    main()
