"""Deterministic synthetic page snapshots for tests and the bundled corpus.

Pages follow common news/blog layouts: a dense-link nav bar, a main article
column, an ad rail, and a footer, with variants across languages, RTL
mirroring, hero headers, very long and very short documents, fixed cookie
banners, and invisible modals.  Geometry is integer-valued and hand-sized so
expected behavior can be derived on paper.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

SNAPSHOT_VERSION = "1"

_WORDS = {
    "en": (
        "the quick brown fox jumps over the lazy dog while morning light "
        "falls across quiet rivers and distant hills people gather to read "
        "long stories about science culture travel history weather markets "
        "music art food and new ideas every single day"
    ).split(),
    "fr": (
        "le monde change vite et les lecteurs cherchent des articles clairs "
        "sur la science la culture le voyage et la vie quotidienne dans les "
        "grandes villes pleines de bruit et de lumière"
    ).split(),
    "ru": (
        "мир быстро меняется и читатели ищут ясные статьи о науке культуре "
        "путешествиях истории и повседневной жизни в больших городах где "
        "всегда есть новости"
    ).split(),
    "ar": (
        "العالم يتغير بسرعة والقراء يبحثون عن مقالات واضحة حول العلوم "
        "والثقافة والسفر والتاريخ والحياة اليومية في المدن الكبيرة"
    ).split(),
    "kr": (
        "뉴스 과학 기술 문화 여행 역사 생활 도시 경제 교육 건강 환경 예술 "
        "음악 음식 스포츠 세계 사회 미래 발전 변화 기사 내용 정보"
    ).split(),
}
_CHARS = {
    "cn": "新闻科技文化旅行历史生活城市经济教育健康环境艺术音乐美食体育世界社会未来发展变化阅读文章内容信息时间空间",
    "jp": "ニュース科学技術文化旅行歴史生活都市経済教育健康環境芸術音楽料理運動世界社会未来発展変化記事内容情報",
}
_MENUS = {
    "en": ["Home", "News", "Sports", "World", "Tech", "Video", "Shop", "More"],
    "fr": ["Accueil", "Infos", "Sport", "Monde", "Tech", "Vidéo", "Boutique", "Plus"],
    "ru": ["Главная", "Новости", "Спорт", "Мир", "Техника", "Видео", "Магазин", "Ещё"],
    "ar": ["الرئيسية", "أخبار", "رياضة", "عالم", "تقنية", "فيديو", "تسوق", "المزيد"],
    "cn": ["首页", "新闻", "体育", "国际", "科技", "视频", "购物", "更多"],
    "jp": ["ホーム", "新着", "運動", "国際", "技術", "動画", "買物", "他"],
    "kr": ["홈", "뉴스", "운동", "세계", "기술", "영상", "쇼핑", "더"],
}


def _sentence(rng: random.Random, lang: str) -> str:
    if lang in _CHARS:
        pool = _CHARS[lang]
        n = rng.randint(8, 22)
        return "".join(rng.choice(pool) for _ in range(n)) + "。"
    words = _WORDS[lang]
    n = rng.randint(6, 14)
    ws = [rng.choice(words) for _ in range(n)]
    return " ".join(ws).capitalize() + "."


def _paragraph(rng: random.Random, lang: str) -> str:
    return " ".join(_sentence(rng, lang) for _ in range(rng.randint(2, 5)))


class SnapshotBuilder:
    """Builds a snapshot dict node by node.

    Children must be appended right after their subtree's context (document
    order); the node list is emitted exactly as added, so callers are
    responsible for adding whole subtrees consecutively.
    """

    def __init__(self, window=(1920, 1080), document=(1920, 3000)):
        self.window = window
        self.document = document
        self.nodes: list[dict] = []
        self._next_id = 0
        self.body_id = self.element(None, "body", 0, 0, document[0], document[1])

    def _add(self, node: dict) -> int:
        self.nodes.append(node)
        return node["id"]

    def element(
        self,
        parent: Optional[int],
        tag: str,
        x: float,
        y: float,
        w: float,
        h: float,
        attr_id: str = "",
        attr_class: str = "",
        visible: bool = True,
        fixed: bool = False,
        is_link: bool = False,
    ) -> int:
        nid = self._next_id
        self._next_id += 1
        node = {
            "id": nid,
            "kind": "element",
            "tag": tag,
            "rect": {"x": x, "y": y, "w": w, "h": h},
            "visible": visible,
        }
        if parent is not None:
            node["parent"] = parent
        if attr_id:
            node["attrId"] = attr_id
        if attr_class:
            node["attrClass"] = attr_class
        if fixed:
            node["fixed"] = True
        if is_link:
            node["isLink"] = True
        return self._add(node)

    def text(
        self,
        parent: int,
        x: float,
        y: float,
        w: float,
        h: float,
        content: str,
        visible: bool = True,
    ) -> int:
        nid = self._next_id
        self._next_id += 1
        return self._add(
            {
                "id": nid,
                "kind": "text",
                "parent": parent,
                "text": content,
                "rect": {"x": x, "y": y, "w": w, "h": h},
                "visible": visible,
            }
        )

    def link(self, parent: int, x, y, w, h, label: str) -> int:
        a = self.element(parent, "a", x, y, w, h, is_link=True)
        self.text(a, x + 4, y + 4, max(w - 8, 1), max(h - 8, 1), label)
        return a

    def snapshot_dict(self) -> dict:
        return {
            "version": SNAPSHOT_VERSION,
            "window": {"w": self.window[0], "h": self.window[1]},
            "document": {"w": self.document[0], "h": self.document[1]},
            "nodes": self.nodes,
        }

    def manifest(self) -> dict:
        """Independent record of what was built, for fixture checks."""
        return {
            "nodeCount": len(self.nodes),
            "rects": {
                str(n["id"]): [n["rect"]["x"], n["rect"]["y"], n["rect"]["w"], n["rect"]["h"]]
                for n in self.nodes
            },
        }


@dataclass
class PageSpec:
    name: str
    lang: str = "en"
    doc_h: int = 3000
    wrapper: str = "tag+attr"  # tag+attr | tag | attr | diff
    rtl: bool = False
    hero: bool = False
    fixed_banner: bool = False
    invisible_modal: bool = False
    sidebar: bool = True
    seed: int = 0
    window: tuple[int, int] = (1920, 1080)


@dataclass
class SynthPage:
    name: str
    snapshot: dict
    truth_node_id: int
    manifest: dict = field(default_factory=dict)


def _mirror(x: float, w: float, doc_w: float) -> float:
    return doc_w - x - w


def build_page(spec: PageSpec) -> SynthPage:
    rng = random.Random(f"{spec.name}:{spec.seed}")
    doc_w, doc_h = spec.window[0], spec.doc_h
    b = SnapshotBuilder(window=spec.window, document=(doc_w, doc_h))
    short = doc_h < spec.window[1]

    def px(x: float, w: float) -> float:
        # mirror horizontally for RTL layouts
        return _mirror(x, w, doc_w) if spec.rtl else x

    # nav bar: a row of link items, each one a single-child wrapper
    nav_h = 50 if short else 100
    nav = b.element(b.body_id, "nav", 0, 0, doc_w, nav_h, attr_class="top-menu")
    item_h = nav_h - 20
    for i, label in enumerate(_MENUS[spec.lang]):
        x = 40 + i * 230
        li = b.element(nav, "li", px(x, 200), 10, 200, item_h)
        b.link(li, px(x, 200), 10, 200, item_h, label)

    # main article column
    art_x, art_w = 360, 1160
    top = nav_h + 10 if short else 150
    bottom = doc_h - (70 if short else 250)
    if spec.hero:
        hero_top = top
        hero_h = 1300
        b.element(
            b.body_id, "div", px(260, 1400), hero_top, 1400, hero_h, attr_class="hero-img"
        )
        top = hero_top + hero_h + 50

    tag, attr_class = {
        "tag+attr": ("article", "post-content"),
        "tag": ("article", "main-col"),
        "attr": ("div", "article-body"),
        "diff": ("div", "colwrap"),
    }[spec.wrapper]
    wrapper = b.element(
        b.body_id, tag, px(art_x, art_w), top, art_w, bottom - top, attr_class=attr_class
    )
    para_w = 600 if spec.wrapper == "diff" else art_w - 40
    para_x = art_x + (art_w - para_w) // 2
    b.text(wrapper, px(para_x, para_w), top + 6, para_w, 40, _sentence(rng, spec.lang))
    cursor = top + 60
    while cursor + 140 <= bottom - 20:
        h = rng.choice((120, 160, 200, 240))
        h = min(h, bottom - 20 - cursor)
        if h < 100:
            break
        p = b.element(wrapper, "p", px(para_x, para_w), cursor, para_w, h)
        b.text(
            p,
            px(para_x + 10, para_w - 20),
            cursor + 8,
            para_w - 20,
            h - 16,
            _paragraph(rng, spec.lang),
        )
        cursor += h + 20

    # ad rail: stacked cards, each a single-child link wrapper
    if spec.sidebar and not spec.hero:
        side_x, side_w = 1520, 400
        side_top = top
        rail = b.element(
            b.body_id, "aside", px(side_x, side_w), side_top, side_w, 800 if not short else bottom - side_top,
            attr_class="ad-rail",
        )
        n_cards = 4 if not short else 2
        for i in range(n_cards):
            y = side_top + i * 200
            card = b.element(rail, "div", px(side_x + 10, side_w - 20), y, side_w - 20, 180)
            b.link(card, px(side_x + 10, side_w - 20), y, side_w - 20, 180, "Ad " + str(i + 1))

    # footer link row
    foot_h = 60 if short else 120
    footer = b.element(b.body_id, "footer", 0, doc_h - foot_h, doc_w, foot_h)
    for i in range(6):
        x = 100 + i * 300
        li = b.element(footer, "div", px(x, 260), doc_h - foot_h + 10, 260, foot_h - 20)
        b.link(li, px(x, 260), doc_h - foot_h + 10, 260, foot_h - 20, "About")

    if spec.fixed_banner:
        banner = b.element(
            b.body_id, "div", 200, spec.window[1] - 160, doc_w - 400, 120,
            attr_class="cookie-banner", fixed=True,
        )
        b.text(banner, 220, spec.window[1] - 150, doc_w - 440, 100,
               "We use cookies to improve your experience.")
    if spec.invisible_modal:
        modal = b.element(
            b.body_id, "div", 400, 300, 800, 600, attr_class="signup-modal", visible=False
        )
        b.text(modal, 420, 330, 760, 60, "Sign up for our newsletter", visible=False)

    return SynthPage(
        name=spec.name,
        snapshot=b.snapshot_dict(),
        truth_node_id=wrapper,
        manifest=b.manifest(),
    )


CORPUS_SPECS: list[PageSpec] = [
    PageSpec("basic_en_01", lang="en", doc_h=3000, wrapper="tag+attr", seed=1),
    PageSpec("basic_en_02", lang="en", doc_h=2400, wrapper="tag+attr", seed=2),
    PageSpec("basic_en_03", lang="en", doc_h=3200, wrapper="tag", seed=3),
    PageSpec("basic_en_04", lang="en", doc_h=2800, wrapper="attr", seed=4),
    PageSpec("basic_fr_05", lang="fr", doc_h=2000, wrapper="attr", seed=5),
    PageSpec("diff_en_01", lang="en", doc_h=2600, wrapper="diff", seed=6),
    PageSpec("diff_en_02", lang="en", doc_h=3400, wrapper="diff", seed=7),
    PageSpec("cjk_cn_01", lang="cn", doc_h=2800, wrapper="tag+attr", seed=8),
    PageSpec("cjk_cn_02", lang="cn", doc_h=3000, wrapper="diff", seed=9),
    PageSpec("cjk_jp_01", lang="jp", doc_h=2400, wrapper="attr", seed=10),
    PageSpec("cjk_kr_01", lang="kr", doc_h=3000, wrapper="tag", seed=11),
    PageSpec("rtl_ar_01", lang="ar", doc_h=2600, wrapper="tag+attr", rtl=True, seed=12),
    PageSpec("rtl_ar_02", lang="ar", doc_h=3200, wrapper="attr", rtl=True, seed=13),
    PageSpec("rtl_ar_03", lang="ar", doc_h=2200, wrapper="diff", rtl=True, seed=14),
    PageSpec("long_en_01", lang="en", doc_h=4800, wrapper="tag+attr", seed=15),
    PageSpec("long_ru_01", lang="ru", doc_h=5400, wrapper="tag", seed=16),
    PageSpec("hero_en_01", lang="en", doc_h=4600, wrapper="tag", hero=True, seed=17),
    PageSpec("hero_en_02", lang="en", doc_h=5000, wrapper="attr", hero=True, seed=18),
    PageSpec("short_en_01", lang="en", doc_h=800, wrapper="tag+attr", seed=19),
    PageSpec("short_en_02", lang="en", doc_h=900, wrapper="attr", seed=20),
    PageSpec("short_ru_01", lang="ru", doc_h=760, wrapper="tag", seed=21),
    PageSpec("banner_en_01", lang="en", doc_h=3000, wrapper="tag+attr", fixed_banner=True, seed=22),
    PageSpec("banner_fr_01", lang="fr", doc_h=2600, wrapper="attr", fixed_banner=True,
             invisible_modal=True, seed=23),
    PageSpec("modal_en_01", lang="en", doc_h=2400, wrapper="tag", invisible_modal=True, seed=24),
]


def build_corpus() -> list[SynthPage]:
    return [build_page(spec) for spec in CORPUS_SPECS]


def build_big_page(total_nodes: int = 500) -> SynthPage:
    """A page with an exact node count, for parser fixture checks.

    Paragraph boxes tile rather than flow once they run past the column;
    only schema validity matters here, not realistic layout.
    """
    rng = random.Random("big_fixture")
    doc_h = 6000
    b = SnapshotBuilder(window=(1920, 1080), document=(1920, doc_h))
    nav = b.element(b.body_id, "nav", 0, 0, 1920, 100, attr_class="top-menu")
    for i, label in enumerate(_MENUS["en"]):
        li = b.element(nav, "li", 40 + i * 230, 10, 200, 80)
        b.link(li, 40 + i * 230, 10, 200, 80, label)
    wrapper = b.element(
        b.body_id, "article", 360, 150, 1160, doc_h - 400, attr_class="post-content"
    )
    tail_nodes = 13 + 19  # ad rail + footer, added below
    i = 0
    while len(b.nodes) + tail_nodes + 2 <= total_nodes:
        x = 400 + (i // 78) * 3
        y = 160 + (i % 78) * 70
        p = b.element(wrapper, "p", x, y, 1100, 60)
        b.text(p, x + 10, y + 5, 1080, 50, _sentence(rng, "en"))
        i += 1
    if len(b.nodes) + tail_nodes < total_nodes:
        b.text(wrapper, 410, 140, 1080, 20, _sentence(rng, "en"))
    rail = b.element(b.body_id, "aside", 1520, 150, 400, 800, attr_class="ad-rail")
    for i in range(4):
        card = b.element(rail, "div", 1530, 150 + i * 200, 380, 180)
        b.link(card, 1530, 150 + i * 200, 380, 180, f"Ad {i + 1}")
    footer = b.element(b.body_id, "footer", 0, doc_h - 120, 1920, 120)
    for i in range(6):
        li = b.element(footer, "div", 100 + i * 300, doc_h - 110, 260, 100)
        b.link(li, 100 + i * 300, doc_h - 110, 260, 100, "About")
    assert len(b.nodes) == total_nodes
    return SynthPage(
        name="big_fixture",
        snapshot=b.snapshot_dict(),
        truth_node_id=wrapper,
        manifest=b.manifest(),
    )


def build_boilerplate_only_page() -> dict:
    """A page whose every text leaf sits inside a link: extraction must fail."""
    b = SnapshotBuilder(window=(1920, 1080), document=(1920, 1080))
    nav = b.element(b.body_id, "nav", 0, 0, 1920, 1080)
    for i in range(8):
        for j in range(4):
            li = b.element(nav, "li", 40 + i * 230, 40 + j * 250, 200, 200)
            b.link(li, 40 + i * 230, 40 + j * 250, 200, 200, f"Item {i}-{j}")
    return b.snapshot_dict()


def build_invisible_only_page() -> dict:
    """A page with no visible text at all: preprocessing must reject it."""
    b = SnapshotBuilder(window=(1920, 1080), document=(1920, 1080))
    div = b.element(b.body_id, "div", 0, 0, 1920, 500, visible=False)
    b.text(div, 10, 10, 500, 100, "hidden", visible=False)
    b.element(b.body_id, "div", 0, 600, 1920, 400)
    return b.snapshot_dict()
