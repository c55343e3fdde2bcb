#!/usr/bin/env python3
# Copyright (c) 2026 GlyphForge Authors. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Regenerates the data files under assets/ and tests/data/:
# character inventories, vocabularies, offline lexicons, the color
# palette, caption/tag pools, sample source documents, and the synthetic
# GlyphForge test fonts. Everything is deterministic; rerunning produces
# byte-identical output.
#
# Requires: python3 + fontTools (any recent version).

import hashlib
import json
import os
import shutil
import struct
import sys

from fontTools.fontBuilder import FontBuilder
from fontTools.pens.ttGlyphPen import TTGlyphPen

ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
ASSETS = os.path.join(ROOT, "assets")
TESTDATA = os.path.join(ROOT, "tests", "data")

DEJAVU_DIR = "/usr/share/fonts/truetype/dejavu"


def h(seed: str) -> bytes:
    return hashlib.sha256(seed.encode("utf-8")).digest()


def hash_stream(seed: str):
    """Infinite deterministic byte stream derived from a seed string."""
    counter = 0
    while True:
        block = h(f"{seed}/{counter}")
        for b in block:
            yield b
        counter += 1


class Det:
    """Tiny deterministic pseudo-random helper over sha256."""

    def __init__(self, seed: str):
        self.stream = hash_stream(seed)

    def byte(self) -> int:
        return next(self.stream)

    def u32(self) -> int:
        return (
            self.byte() | (self.byte() << 8) | (self.byte() << 16) | (self.byte() << 24)
        )

    def below(self, n: int) -> int:
        assert n > 0
        return self.u32() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num


# ---------------------------------------------------------------------------
# Character inventories
# ---------------------------------------------------------------------------

LATIN_BASE = [chr(c) for c in range(ord("A"), ord("Z") + 1)] + [
    chr(c) for c in range(ord("a"), ord("z") + 1)
]

# Lowercase accented additions per language; uppercase forms are paired
# automatically. Sizes are pinned by the asserts below.
FR_EXTRA = "àâæçéèêëîïôœùû"  # 14 pairs -> +28
ES_EXTRA = "áéíóúüñ"  # 7 pairs -> +14
PT_EXTRA = "áâãàçéêíóôõú"  # 12 pairs -> +24
IT_EXTRA = "àèéìíîòóùú"  # 10 pairs -> +20

RU_LOWER = "абвгдеёжзийклмнопрстуфхцчшщъыьэюя"  # 33 letters -> 66 with uppercase

# A hand-picked head of frequent hanzi so that the inventory contains the
# characters exercised by the shape-replacement data; the tail is filled
# with consecutive CJK Unified Ideographs.
CN_HEAD = (
    "的一是不了人我在有他这为之大来以个中上们到说国和地也子时道出而要于就下得可你"
    "年生自会那后能对着事其里所去行过家十用发天如然作方成者多日都三小军二无同么经"
    "法当起与好看学进种将还分此心前面又定见只主没公从问使明力尔后新等反受白老果战"
    "最西月比然间觉星光海思路很被女真员几但手应点解入做再想实听远证处队信第山любо"
)

CJK_BASE = 0x4E00


def lexicon_hanzi():
    """Ideographs the offline lexicons emit; the cn head must contain them."""
    chars = []
    for lang in ("cn", "jp"):
        for value in LEXICON[lang].values():
            for ch in value:
                if 0x4E00 <= ord(ch) <= 0x9FFF:
                    chars.append(ch)
    return chars


def build_cn_inventory():
    seen = []
    seen_set = set()
    for ch in list(CN_HEAD) + lexicon_hanzi():
        cp = ord(ch)
        if 0x4E00 <= cp <= 0x9FFF and ch not in seen_set:
            seen.append(ch)
            seen_set.add(ch)
    cp = CJK_BASE
    while len(seen) < 5000:
        ch = chr(cp)
        if ch not in seen_set:
            seen.append(ch)
            seen_set.add(ch)
        cp += 1
    return seen


def build_jp_inventory(cn_inventory):
    out = []
    for cp in range(0x3041, 0x3097):  # hiragana
        out.append(chr(cp))
    for cp in range(0x30A1, 0x30FB):  # katakana
        out.append(chr(cp))
    out.append(chr(0x30FC))  # prolonged sound mark
    need = 1148 - len(out)
    out.extend(cn_inventory[:need])
    return out


# Pseudo-frequency ordering of hangul jamo; syllables are scored by the
# summed ranks of their components and the 617 best kept.
KR_LEADS = [11, 0, 2, 5, 9, 12, 3, 6, 18, 7, 14, 16, 15, 17, 1, 4, 8, 10, 13]
KR_VOWELS = [0, 20, 18, 4, 8, 13, 1, 5, 6, 2, 12, 17, 7, 3, 9, 16, 11, 19, 10, 14, 15]
KR_TAILS = [0, 4, 21, 8, 1, 16, 17, 19, 23, 9, 14, 27, 2, 3, 5, 6, 7, 10, 11, 12, 13, 15, 18, 20, 22, 24, 25, 26]


def build_kr_inventory():
    required = []
    req_set = set()
    for value in LEXICON["kr"].values():
        for ch in value:
            if 0xAC00 <= ord(ch) <= 0xD7A3 and ch not in req_set:
                required.append(ch)
                req_set.add(ch)
    scored = []
    for li, lead in enumerate(KR_LEADS):
        for vi, vowel in enumerate(KR_VOWELS):
            for ti, tail in enumerate(KR_TAILS):
                score = li * 3 + vi * 2 + ti * 5
                cp = 0xAC00 + (lead * 21 + vowel) * 28 + tail
                scored.append((score, cp))
    scored.sort()
    out = list(required)
    out_set = set(req_set)
    for _, cp in scored:
        if len(out) == 617:
            break
        ch = chr(cp)
        if ch not in out_set:
            out.append(ch)
            out_set.add(ch)
    return out


def charset_for(lang, cn_inv, jp_inv, kr_inv):
    def paired(extra):
        return LATIN_BASE + [c.upper() for c in extra] + list(extra)

    if lang == "en":
        return list(LATIN_BASE)
    if lang == "fr":
        return paired(FR_EXTRA)
    if lang == "es":
        return paired(ES_EXTRA)
    if lang == "de":
        return LATIN_BASE + ["Ä", "Ö", "Ü", "ẞ", "ä", "ö", "ü", "ß"]
    if lang == "pt":
        return paired(PT_EXTRA)
    if lang == "it":
        return paired(IT_EXTRA)
    if lang == "ru":
        return [c.upper() for c in RU_LOWER] + list(RU_LOWER)
    if lang == "cn":
        return cn_inv
    if lang == "jp":
        return jp_inv
    if lang == "kr":
        return kr_inv
    raise ValueError(lang)


CHARSET_SIZES = {
    "en": 52,
    "fr": 80,
    "es": 66,
    "de": 60,
    "pt": 76,
    "it": 72,
    "ru": 66,
    "cn": 5000,
    "jp": 1148,
    "kr": 617,
}

PROVENANCE = {
    "en": "basic latin letters",
    "fr": "52 base letters plus 14 reconstructed accent pairs",
    "es": "52 base letters plus 7 reconstructed accent pairs",
    "de": "52 base letters plus umlauts and both sharp-s forms (reconstruction)",
    "pt": "52 base letters plus 12 reconstructed accent pairs",
    "it": "52 base letters plus 10 reconstructed accent pairs",
    "ru": "full cyrillic alphabet, both cases",
    "cn": "frequency-flavoured head plus consecutive cjk unified ideographs (reconstruction)",
    "jp": "kana plus prolonged mark plus leading hanzi subset (reconstruction)",
    "kr": "617 hangul syllables ranked by component jamo frequency (reconstruction)",
}


def write_charsets():
    cn_inv = build_cn_inventory()
    jp_inv = build_jp_inventory(cn_inv)
    kr_inv = build_kr_inventory()
    os.makedirs(os.path.join(ASSETS, "charsets"), exist_ok=True)
    charsets = {}
    for lang, size in CHARSET_SIZES.items():
        inv = charset_for(lang, cn_inv, jp_inv, kr_inv)
        assert len(inv) == size, (lang, len(inv))
        assert len(set(inv)) == size, lang
        charsets[lang] = inv
        path = os.path.join(ASSETS, "charsets", f"{lang}.txt")
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(f"# glyphforge-charset language={lang} size={size}\n")
            f.write(f"# provenance: {PROVENANCE[lang]}\n")
            for ch in inv:
                f.write(ch + "\n")
    return charsets


# ---------------------------------------------------------------------------
# Vocabularies
# ---------------------------------------------------------------------------

EN_CORE = """the of and to in is you that it he was for on are as with his they at be this have from or one had by
word but not what all were we when your can said there use an each which she do how their if will up other about out
many then them these so some her would make like him into time has look two more write go see number no way could
people my than first water been called who oil sit now find long down day did get come made may part over new sound
take only little work know place years live me back give most very after things our just name good sentence man
think say great where help through much before line right too means old any same tell boy follow came want show
also around form three small set put end does another well large must big even such because turn here why ask went
men read need land different home us move try kind hand picture again change off play spell air away animal house
point page letter mother answer found study still learn should world high every near add food between own below
country plant last school father keep tree never start city earth eyes light thought head under story saw left
dont few while along might close something seem next hard open example begin life always those both paper
together got group often run important until children side feet car mile night walk white sea began grow took
river four carry state once book hear stop without second later miss idea enough eat face watch far really almost
let above girl sometimes mountain cut young talk soon list song being leave family body music color stand sun
question fish area mark dog horse birds problem complete room knew since ever piece told usually friends easy
heard order red door sure become top ship across today during short better best however low hours black products
happened whole measure remember early waves reached listen wind rock space covered fast several hold himself
toward five step morning passed vowel true hundred against pattern numeral table north slowly money map farm
pulled draw voice seen cold cried plan notice south sing war ground fall king town unit figure certain field
travel wood fire upon done english road half ten fly gave box finally wait correct oh quickly person became
shown minutes strong verb stars front feel fact inches street decided contain course surface produce building
ocean class note nothing rest carefully scientists inside wheels stay green known island week less machine base
ago stood plane system behind ran round boat game force brought understand warm common bring explain dry though
language shape deep thousands yes clear equation yet government filled heat full hot check object am rule among
noun power cannot able six size dark ball material special heavy fine pair circle include built summer sale
thanks welcome invite party event design poster card happy love
""".split()

FR_CORE = """le la les de des un une et est sont pour dans sur avec vous nous ils elle je tu il que qui mais ou
donc car ne pas plus moins très bien mal tout tous toute temps jour nuit an mois semaine heure monde vie eau feu
terre air mer ciel soleil lune fleur arbre maison ville pays amour joie fête merci bonjour salut oui non peut
faire dire aller voir savoir venir devoir vouloir pouvoir grand petit beau belle bon bonne nouveau vieux jeune
premier dernier même autre chaque quelques où été hiver printemps automne chez entre sans sous vers depuis pendant
après avant toujours jamais souvent parfois ici là bas haut gauche droite rouge bleu vert jaune noir blanc pâques
contente planté fleurir journée internationale femme mars soldes réduction offre spéciale gratuit ateliers
débutants conception graphique action santé yoga côté être âme œuvre cœur goût même fenêtre français château
forêt île hôtel hôpital école élève étoile légère chère père mère frère sœur garçon"""
FR_CORE = FR_CORE.split()

ES_CORE = """el la los las de del un una y es son para en con por vosotros nosotros ellos ella yo tú él que quien
pero o ni no más menos muy bien mal todo todos tiempo día noche año mes semana hora mundo vida agua fuego tierra
aire mar cielo sol luna flor árbol casa ciudad país amor alegría fiesta gracias hola sí puede hacer decir ir ver
saber venir deber querer poder grande pequeño hermoso bueno nuevo viejo joven primero último mismo otro cada
algunos donde invierno primavera otoño verano entre sin bajo hacia desde durante después antes siempre nunca
aquí allí rojo azul verde amarillo negro blanco invitado selva junio nuevo comienzo cambio mejorar feliz año
donación cerca alcanzar metas regalo únicas familia cálida muñeca trapo ramadán bendecido señor niño años
corazón canción camión jardín razón montaña mañana español música médico rápido número público sábado"""
ES_CORE = ES_CORE.split()

DE_CORE = """der die das ein eine und ist sind für in auf mit ihr wir sie ich du er es dass wer aber oder nicht
mehr weniger sehr gut schlecht alle alles zeit tag nacht jahr monat woche stunde welt leben wasser feuer erde
luft meer himmel sonne mond blume baum haus stadt land liebe freude fest danke hallo ja nein kann machen sagen
gehen sehen wissen kommen müssen wollen können groß klein schön gut neu alt jung erste letzte gleich andere jede
einige wo winter frühling herbst sommer zwischen ohne unter nach seit während nach vor immer nie oft manchmal
hier dort rot blau grün gelb schwarz weiß mutter erde beschütze bitte ehren uhr november babyparty tiere retten
wildtiere welttag folge dich liebe straße größe fuß weiß heißt außen süß grüße müde über für wörter schließen
zu an tag ßtraße ärger öl übung"""
DE_CORE = DE_CORE.split()

PT_CORE = """o a os as de do da um uma e é são para em com por vós nós eles ela eu tu ele que quem mas ou não
mais menos muito bem mal todo todos tempo dia noite ano mês semana hora mundo vida água fogo terra ar mar céu
sol lua flor árvore casa cidade país amor alegria festa obrigado olá sim pode fazer dizer ir ver saber vir dever
querer poder grande pequeno belo bom novo velho jovem primeiro último mesmo outro cada alguns onde inverno
primavera outono verão entre sem sob até desde durante depois antes sempre nunca aqui ali vermelho azul verde
amarelo preto branco páscoa domingo abril oração atendidas panqueca desconto pedido seguidores grátis vegetariano
outubro mundial coração cançãoção irmão mãe pão põe avó avô"""
PT_CORE = PT_CORE.split()

IT_CORE = """il lo la i gli le di del della un una e è sono per in su con da voi noi loro lei io tu lui che chi
ma o né non più meno molto bene male tutto tutti tempo giorno notte anno mese settimana ora mondo vita acqua
fuoco terra aria mare cielo sole luna fiore albero casa città paese amore gioia festa grazie ciao sì può fare
dire andare vedere sapere venire dovere volere potere grande piccolo bello buono nuovo vecchio giovane primo
ultimo stesso altro ogni alcuni dove inverno primavera autunno estate tra senza sotto verso da durante dopo
prima sempre mai spesso qui lì rosso blu verde giallo nero bianco leggi ora ricette preferite ringraziamento
ordina adesso sconti delizioso gamberi matrimonio drink ballo celebrare sabato settembre natura piccolo passo
ozono riciclare università caffè perché città lunedì martedì così più virtù"""
IT_CORE = IT_CORE.split()

RU_CORE = """и в не на я быть он с что а по это она этот к но они мы как из у который то за свой весь год от
так о для ты же все тот мочь вы человек такой его сказать только или ещё бы себя один как уже до время если
сам когда другой вот говорить наш мой знать стать при чтобы дело жизнь кто первый очень два день её новый
рука даже во со раз где там под можно ну какой после их работа без самый потом надо хотеть ли слово идти
большой должен место иметь ничто мир друг дом теперь умный звезда солнце луна цветок дерево город страна
любовь радость праздник спасибо привет да нет красный синий зелёный жёлтый чёрный белый день рождения
приглашены счастливый дурака апреля рыбака поисках счастья пожертвованием целям значишь меня принцесса
дракона ночью окно улыбка"""
RU_CORE = RU_CORE.split()

SUFFIXES = {
    "en": ["s", "ed", "ing", "er", "ly", "ness", "ful", "less", "est", "y"],
    "fr": ["s", "e", "es", "ment", "eur", "euse", "age", "ier", "ette", "ons"],
    "es": ["s", "es", "mente", "dor", "dora", "ción", "ito", "ita", "oso", "ar"],
    "de": ["en", "er", "ung", "heit", "keit", "lich", "isch", "chen", "e", "st"],
    "pt": ["s", "es", "mente", "dor", "ção", "inho", "inha", "oso", "ar", "am"],
    "it": ["i", "e", "mente", "tore", "zione", "ino", "ina", "oso", "are", "ata"],
    "ru": ["ы", "ов", "ами", "ение", "ость", "ный", "ная", "ить", "ать", "ок"],
}

SYLLABLES = {
    "en": ["ba", "con", "der", "fin", "gra", "hel", "jor", "kem", "lun", "mor", "nor", "pel", "quin", "ros", "sta", "tor", "vel", "win", "yor", "zan"],
    "fr": ["beau", "car", "deu", "fleu", "gran", "jou", "lune", "mai", "nou", "pari", "quel", "rou", "sou", "tou", "vieu", "ché", "çon", "être", "île", "cœu"],
    "es": ["bue", "cam", "dor", "fue", "gran", "jar", "lun", "mon", "nue", "pla", "que", "ros", "sol", "tar", "ver", "ñon", "ción", "güe", "ría", "ábi"],
    "de": ["bau", "dorf", "fel", "gros", "hau", "jung", "klei", "lang", "mor", "neu", "pfer", "quel", "rau", "schnе", "tag", "übe", "wald", "zie", "öde", "äch"],
    "pt": ["bom", "cam", "dor", "fog", "gran", "jan", "lua", "mon", "nov", "pra", "que", "ros", "sol", "tar", "ver", "ção", "nhã", "õe", "ria", "ági"],
    "it": ["bel", "cam", "dol", "fio", "gran", "gior", "lun", "mon", "nuo", "pia", "que", "ros", "sol", "tar", "ver", "zio", "ità", "ché", "giù", "òra"],
    "ru": ["ба", "вер", "гор", "дом", "жел", "зем", "кра", "лун", "мор", "нов", "пол", "рад", "сол", "тер", "увл", "хор", "цвет", "шир", "ёлк", "ясн"],
}


def synth_word(det, lang, charset_lower):
    n = 1 + det.below(4)
    word = "".join(det.choice(SYLLABLES[lang]) for _ in range(n))
    if det.chance(2, 5):
        word += det.choice(SUFFIXES[lang])
    # keep within the language inventory
    word = "".join(c for c in word if c in charset_lower or c.lower() in charset_lower)
    return word


def build_alpha_vocab(lang, core, charset):
    charset_set = set(charset)
    charset_lower = {c for c in charset if c.islower()}
    det = Det(f"vocab/{lang}")
    words = []
    seen = set()

    def push(w):
        if w and w not in seen and all(c in charset_set for c in w):
            seen.add(w)
            words.append(w)

    for w in core:
        push(w)
    # short filler, keeps trim/pad feasible at small counts
    for c in sorted(charset_lower):
        push(c)
    while len(words) < 5000:
        w = synth_word(det, lang, charset_lower)
        if det.chance(1, 7):
            w = w.capitalize()
        elif det.chance(1, 13):
            w = w.upper()
        push(w)
    return words[:5000]


def build_cjk_vocab(lang, charset):
    det = Det(f"vocab/{lang}")
    words = []
    seen = set()
    pool = charset
    head = pool[: min(len(pool), 400)]
    while len(words) < 5000:
        n = 1 + det.below(3)
        src = head if det.chance(3, 4) else pool
        w = "".join(det.choice(src) for _ in range(n))
        if w not in seen:
            seen.add(w)
            words.append(w)
    return words


def write_vocabs(charsets):
    os.makedirs(os.path.join(ASSETS, "vocab"), exist_ok=True)
    for lang in CHARSET_SIZES:
        charset = charsets[lang]
        if lang in ("cn", "jp", "kr"):
            words = build_cjk_vocab(lang, charset)
        else:
            core = {
                "en": EN_CORE, "fr": FR_CORE, "es": ES_CORE, "de": DE_CORE,
                "pt": PT_CORE, "it": IT_CORE, "ru": RU_CORE,
            }[lang]
            words = build_alpha_vocab(lang, core, charset)
        assert len(words) == 5000
        # zipf-flavoured counts, strictly decreasing so rank order is stable
        path = os.path.join(ASSETS, "vocab", f"{lang}.txt")
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(f"# glyphforge-vocab language={lang} size={len(words)}\n")
            f.write("# provenance: curated head plus deterministic synthetic tail\n")
            for rank, w in enumerate(words):
                count = 10_000_000 // (rank + 10)
                f.write(f"{w}\t{count}\n")


# ---------------------------------------------------------------------------
# Offline lexicons (english -> target)
# ---------------------------------------------------------------------------

LEXICON = {
    "fr": {
        "the": "le", "and": "et", "of": "de", "to": "à", "in": "dans", "is": "est",
        "you": "vous", "we": "nous", "day": "jour", "night": "nuit", "sun": "soleil",
        "moon": "lune", "water": "eau", "fire": "feu", "earth": "terre", "world": "monde",
        "life": "vie", "love": "amour", "house": "maison", "city": "ville", "tree": "arbre",
        "flower": "fleur", "happy": "heureux", "new": "nouveau", "old": "vieux",
        "big": "grand", "small": "petit", "good": "bon", "red": "rouge", "blue": "bleu",
        "green": "vert", "white": "blanc", "black": "noir", "thanks": "merci",
        "thank": "merci", "hello": "bonjour", "welcome": "bienvenue", "party": "fête",
        "sale": "soldes", "free": "gratuit", "now": "maintenant", "today": "aujourdhui",
        "year": "année", "time": "temps", "spring": "printemps", "summer": "été",
        "winter": "hiver", "read": "lire", "music": "musique", "friend": "ami",
        "family": "famille", "mother": "mère", "father": "père", "heart": "cœur",
        "star": "étoile", "light": "lumière", "sea": "mer", "sky": "ciel",
        "invitation": "invitation", "special": "spécial", "offer": "offre",
        "discount": "réduction", "event": "événement", "design": "conception",
    },
    "es": {
        "the": "el", "and": "y", "of": "de", "to": "a", "in": "en", "is": "es",
        "you": "tú", "we": "nosotros", "day": "día", "night": "noche", "sun": "sol",
        "moon": "luna", "water": "agua", "fire": "fuego", "earth": "tierra",
        "world": "mundo", "life": "vida", "love": "amor", "house": "casa",
        "city": "ciudad", "tree": "árbol", "flower": "flor", "happy": "feliz",
        "new": "nuevo", "old": "viejo", "big": "grande", "small": "pequeño",
        "good": "bueno", "red": "rojo", "blue": "azul", "green": "verde",
        "white": "blanco", "black": "negro", "thanks": "gracias", "hello": "hola",
        "welcome": "bienvenido", "party": "fiesta", "sale": "rebajas", "free": "gratis",
        "now": "ahora", "today": "hoy", "year": "año", "time": "tiempo",
        "spring": "primavera", "summer": "verano", "winter": "invierno",
        "read": "leer", "music": "música", "friend": "amigo", "family": "familia",
        "mother": "madre", "father": "padre", "heart": "corazón", "star": "estrella",
        "light": "luz", "sea": "mar", "sky": "cielo", "special": "especial",
        "offer": "oferta", "discount": "descuento", "event": "evento",
    },
    "de": {
        "the": "der", "and": "und", "of": "von", "to": "zu", "in": "in", "is": "ist",
        "you": "du", "we": "wir", "day": "Tag", "night": "Nacht", "sun": "Sonne",
        "moon": "Mond", "water": "Wasser", "fire": "Feuer", "earth": "Erde",
        "world": "Welt", "life": "Leben", "love": "Liebe", "house": "Haus",
        "city": "Stadt", "tree": "Baum", "flower": "Blume", "happy": "glücklich",
        "new": "neu", "old": "alt", "big": "groß", "small": "klein", "good": "gut",
        "red": "rot", "blue": "blau", "green": "grün", "white": "weiß",
        "black": "schwarz", "thanks": "danke", "hello": "hallo",
        "welcome": "willkommen", "party": "Feier", "sale": "Verkauf", "free": "gratis",
        "now": "jetzt", "today": "heute", "year": "Jahr", "time": "Zeit",
        "spring": "Frühling", "summer": "Sommer", "winter": "Winter",
        "read": "lesen", "music": "Musik", "friend": "Freund", "family": "Familie",
        "mother": "Mutter", "father": "Vater", "heart": "Herz", "star": "Stern",
        "light": "Licht", "sea": "Meer", "sky": "Himmel", "special": "besonders",
        "offer": "Angebot", "discount": "Rabatt", "event": "Ereignis",
    },
    "pt": {
        "the": "o", "and": "e", "of": "de", "to": "para", "in": "em", "is": "é",
        "you": "tu", "we": "nós", "day": "dia", "night": "noite", "sun": "sol",
        "moon": "lua", "water": "água", "fire": "fogo", "earth": "terra",
        "world": "mundo", "life": "vida", "love": "amor", "house": "casa",
        "city": "cidade", "tree": "árvore", "flower": "flor", "happy": "feliz",
        "new": "novo", "old": "velho", "big": "grande", "small": "pequeno",
        "good": "bom", "red": "vermelho", "blue": "azul", "green": "verde",
        "white": "branco", "black": "preto", "thanks": "obrigado", "hello": "olá",
        "welcome": "bemvindo", "party": "festa", "sale": "promoção", "free": "grátis",
        "now": "agora", "today": "hoje", "year": "ano", "time": "tempo",
        "spring": "primavera", "summer": "verão", "winter": "inverno",
        "read": "ler", "music": "música", "friend": "amigo", "family": "família",
        "mother": "mãe", "father": "pai", "heart": "coração", "star": "estrela",
        "light": "luz", "sea": "mar", "sky": "céu", "special": "especial",
        "offer": "oferta", "discount": "desconto", "event": "evento",
    },
    "it": {
        "the": "il", "and": "e", "of": "di", "to": "a", "in": "in", "is": "è",
        "you": "tu", "we": "noi", "day": "giorno", "night": "notte", "sun": "sole",
        "moon": "luna", "water": "acqua", "fire": "fuoco", "earth": "terra",
        "world": "mondo", "life": "vita", "love": "amore", "house": "casa",
        "city": "città", "tree": "albero", "flower": "fiore", "happy": "felice",
        "new": "nuovo", "old": "vecchio", "big": "grande", "small": "piccolo",
        "good": "buono", "red": "rosso", "blue": "blu", "green": "verde",
        "white": "bianco", "black": "nero", "thanks": "grazie", "hello": "ciao",
        "welcome": "benvenuto", "party": "festa", "sale": "saldi", "free": "gratis",
        "now": "ora", "today": "oggi", "year": "anno", "time": "tempo",
        "spring": "primavera", "summer": "estate", "winter": "inverno",
        "read": "leggi", "music": "musica", "friend": "amico", "family": "famiglia",
        "mother": "madre", "father": "padre", "heart": "cuore", "star": "stella",
        "light": "luce", "sea": "mare", "sky": "cielo", "special": "speciale",
        "offer": "offerta", "discount": "sconto", "event": "evento",
    },
    "ru": {
        "the": "это", "and": "и", "of": "из", "to": "к", "in": "в", "is": "есть",
        "you": "ты", "we": "мы", "day": "день", "night": "ночь", "sun": "солнце",
        "moon": "луна", "water": "вода", "fire": "огонь", "earth": "земля",
        "world": "мир", "life": "жизнь", "love": "любовь", "house": "дом",
        "city": "город", "tree": "дерево", "flower": "цветок", "happy": "счастливый",
        "new": "новый", "old": "старый", "big": "большой", "small": "маленький",
        "good": "хороший", "red": "красный", "blue": "синий", "green": "зелёный",
        "white": "белый", "black": "чёрный", "thanks": "спасибо", "hello": "привет",
        "welcome": "добро", "party": "праздник", "sale": "распродажа",
        "free": "бесплатно", "now": "сейчас", "today": "сегодня", "year": "год",
        "time": "время", "spring": "весна", "summer": "лето", "winter": "зима",
        "read": "читать", "music": "музыка", "friend": "друг", "family": "семья",
        "mother": "мать", "father": "отец", "heart": "сердце", "star": "звезда",
        "light": "свет", "sea": "море", "sky": "небо", "special": "особый",
        "offer": "предложение", "discount": "скидка", "event": "событие",
    },
    "cn": {
        "the": "这", "and": "和", "of": "的", "to": "到", "in": "在", "is": "是",
        "you": "你", "we": "我们", "day": "天", "night": "夜", "sun": "太阳",
        "moon": "月亮", "water": "水", "fire": "火", "earth": "地", "world": "世界",
        "life": "生活", "love": "爱", "house": "家", "city": "城市", "tree": "树",
        "flower": "花", "happy": "快乐", "new": "新", "old": "老", "big": "大",
        "small": "小", "good": "好", "red": "红", "blue": "蓝", "green": "绿",
        "white": "白", "black": "黑", "thanks": "谢谢", "hello": "你好",
        "welcome": "欢迎", "party": "聚会", "sale": "特卖", "free": "免费",
        "now": "现在", "today": "今天", "year": "年", "time": "时间",
        "read": "读", "music": "音乐", "friend": "朋友", "family": "家人",
        "mother": "母亲", "father": "父亲", "heart": "心", "star": "星",
        "light": "光", "sea": "海", "sky": "天空",
    },
    "jp": {
        "the": "その", "and": "と", "of": "の", "to": "へ", "in": "で", "is": "です",
        "you": "あなた", "we": "私たち", "day": "日", "night": "夜", "sun": "太陽",
        "moon": "月", "water": "水", "fire": "火", "earth": "地", "world": "世界",
        "life": "生活", "love": "愛", "house": "家", "city": "都市", "tree": "木",
        "flower": "花", "happy": "幸せ", "new": "新しい", "old": "古い", "big": "大きい",
        "small": "小さい", "good": "良い", "red": "赤", "blue": "青", "green": "緑",
        "white": "白", "black": "黒", "thanks": "ありがとう", "hello": "こんにちは",
        "welcome": "ようこそ", "party": "パーティー", "free": "無料", "now": "今",
        "today": "今日", "year": "年", "time": "時間", "read": "読む",
        "music": "音楽", "friend": "友達", "family": "家族", "heart": "心",
        "star": "星", "light": "光", "sea": "海", "sky": "空",
    },
    "kr": {
        "the": "그", "and": "와", "of": "의", "to": "에", "in": "에서", "is": "이다",
        "you": "너", "we": "우리", "day": "날", "night": "밤", "sun": "해",
        "moon": "달", "water": "물", "fire": "불", "earth": "땅", "world": "세계",
        "life": "생활", "love": "사랑", "house": "집", "city": "도시", "tree": "나무",
        "flower": "꽃", "happy": "행복", "new": "새", "old": "오래된", "big": "큰",
        "small": "작은", "good": "좋은", "red": "빨강", "blue": "파랑", "green": "초록",
        "white": "하양", "black": "검정", "thanks": "감사", "hello": "안녕",
        "welcome": "환영", "party": "파티", "free": "무료", "now": "지금",
        "today": "오늘", "year": "년", "time": "시간", "read": "읽다",
        "music": "음악", "friend": "친구", "family": "가족", "heart": "마음",
        "star": "별", "light": "빛", "sea": "바다", "sky": "하늘",
    },
}


def write_lexicons():
    os.makedirs(os.path.join(ASSETS, "lexicons"), exist_ok=True)
    for lang, table in LEXICON.items():
        path = os.path.join(ASSETS, "lexicons", f"en-{lang}.tsv")
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for en, tr in sorted(table.items()):
                f.write(f"{en}\t{tr}\n")


# ---------------------------------------------------------------------------
# Palette, captions, tags, shape overrides
# ---------------------------------------------------------------------------


def hsv_to_rgb(hdeg, s, v):
    c = v * s
    x = c * (1 - abs((hdeg / 60.0) % 2 - 1))
    m = v - c
    if hdeg < 60:
        rgb = (c, x, 0)
    elif hdeg < 120:
        rgb = (x, c, 0)
    elif hdeg < 180:
        rgb = (0, c, x)
    elif hdeg < 240:
        rgb = (0, x, c)
    elif hdeg < 300:
        rgb = (x, 0, c)
    else:
        rgb = (c, 0, x)
    return [int(round((u + m) * 255)) for u in rgb]


def write_palette():
    colors = [[255, 255, 255]]
    sats = [0.85, 0.55, 0.95, 0.35]
    vals = [0.95, 0.75, 0.55, 0.85]
    i = 0
    while len(colors) < 128:
        hdeg = (i * 137.50776405) % 360.0
        s = sats[i % 4]
        v = vals[(i // 4) % 4]
        rgb = hsv_to_rgb(hdeg, s, v)
        if rgb == [0, 0, 0]:
            rgb = [16, 16, 16]
        colors.append(rgb)
        i += 1
    with open(os.path.join(ASSETS, "palette.json"), "w", newline="\n") as f:
        json.dump(colors, f, separators=(",", ":"))
        f.write("\n")


CAPTIONS = [
    "Instagram Posts. A serene watercolor landscape with rolling hills and a rising sun.",
    "Posters. A bold geometric backdrop of overlapping triangles in warm tones.",
    "Cards and invitations. A bouquet of roses arranged in a vase on a wooden table.",
    "Facebook Post. A stack of pancakes with syrup and fresh strawberries on top.",
    "Instagram Posts. A pink background with a single white flower in the center.",
    "Posters. Snow covered mountains with pine trees scattered across the slopes.",
    "Cards and invitations. Two teddy bears sitting together on a grassy meadow.",
    "Pinterest pins. A white card with a hand drawn flower beside a potted plant.",
    "Videos. A hand holding a small green sapling growing out of dark soil.",
    "Instagram Posts. A large archway decorated with hanging paper lanterns at dusk.",
    "Posters. A green and blue globe with tiny trees circling the equator.",
    "Facebook Post. A wooden table covered with apples oranges and a glass cup.",
    "Instagram Posts. A basket filled with painted eggs and spring flowers.",
    "Cards and invitations. A castle on a grassy hill with a dragon perched on top.",
    "Pinterest pins. A dining table set for a feast with a roasted pumpkin centerpiece.",
    "Instagram Posts. A woman practicing yoga outdoors surrounded by tall trees.",
    "Posters. An illustrated night sky full of stars above a sleeping city.",
    "Facebook Post. Two iced coffee drinks topped with a swirl of cream.",
    "Cards and invitations. A border of elephants giraffes and colorful birds.",
    "Instagram Posts. A cartoon laptop with a friendly robot waving from the screen.",
    "Posters. A retro band poster with musical notes and abstract sound waves.",
    "Videos. A lighthouse on a rocky shore under sweeping storm clouds.",
    "Pinterest pins. A flat lay of art supplies brushes and paint tubes.",
    "Instagram Posts. A shiba inu wearing a plaid scarf against a yellow wall.",
    "Cards and invitations. A tarot card framed by stars and crescent moons.",
    "Posters. A minimalist sunrise over calm water in soft pastel bands.",
    "Facebook Post. A bowl of steaming noodles with chopsticks resting on the rim.",
    "Instagram Posts. A paper cut stage with red lanterns and golden dragons.",
    "Videos. A field of sunflowers bending toward the afternoon light.",
    "Cards and invitations. A clown balancing painted eggs in a circus ring.",
    "Posters. An autumn forest path covered with fallen orange leaves.",
    "Pinterest pins. A cup of tea beside an open notebook and a sprig of lavender.",
]

TAGS = [
    "modern", "minimalist", "illustration", "colorful", "pastel", "vintage",
    "playful", "elegant", "abstract", "watercolor", "geometric", "festive",
    "cute", "bold", "organic", "retro", "celebration", "greeting", "event",
    "party", "birthday", "wedding", "holiday", "sale", "discount", "promo",
    "nature", "spring", "summer", "autumn", "winter", "food", "travel",
    "music", "fitness", "yoga", "love", "family", "business", "template",
    "poster", "card", "social media", "marketing", "creative", "design",
    "green", "blue", "red", "yellow", "pink", "gold", "white", "brown",
]

SHAPE_OVERRIDES = [
    ("了", "子"),
    ("白", "自"),
    ("间", "问"),
    ("觉", "光"),
    ("星", "里"),
]


def write_pools():
    with open(os.path.join(ASSETS, "captions.txt"), "w", encoding="utf-8", newline="\n") as f:
        for c in CAPTIONS:
            f.write(c + "\n")
    with open(os.path.join(ASSETS, "tags.txt"), "w", encoding="utf-8", newline="\n") as f:
        for t in TAGS:
            f.write(t + "\n")
    with open(os.path.join(ASSETS, "shape_overrides.tsv"), "w", encoding="utf-8", newline="\n") as f:
        for a, b in SHAPE_OVERRIDES:
            f.write(f"{a}\t{b}\n")


# ---------------------------------------------------------------------------
# Source design documents (english)
# ---------------------------------------------------------------------------

PHRASES = [
    ["SUMMER SALE", "up to sixty percent off", "shop the collection today"],
    ["Thank you", "for one hundred thousand followers", "you make this possible"],
    ["HAPPY NEW YEAR", "a fresh start for a better change", "all the best"],
    ["You are invited", "JUNGLE PARTY", "Saturday at eight in the evening"],
    ["READ NOW", "my favorite recipes for the holiday season"],
    ["International", "YOGA DAY", "move toward health with us"],
    ["GRAND OPENING", "free coffee for the first fifty guests"],
    ["Baby Shower", "please join us in honor of Sophia", "rsvp by friday"],
    ["WINTER SALE", "special offer", "limited time only"],
    ["Save the Earth", "small steps make a big difference"],
    ["LIVE MUSIC", "every friday night", "doors open at seven"],
    ["Mothers Day", "thank you for everything", "with all our love"],
    ["BOOK FAIR", "stories for every reader", "april twelve to fifteen"],
    ["Welcome back", "we missed you", "enjoy ten percent off"],
    ["ART WORKSHOP", "for beginners", "graphic design basics", "FREE"],
    ["Good Morning", "fresh bread baked daily"],
    ["EARTH DAY", "the planet is what we all have in common"],
    ["Wedding Invitation", "Olivia and Owen", "dinner drinks and dancing"],
    ["FINAL CALL", "last seats for the spring workshop"],
    ["Pet Adoption", "give a stray a loving home", "every paw matters"],
    ["Happy Easter", "may all your prayers be answered"],
    ["NEW MENU", "taste the season", "order now and get a surprise"],
    ["Graduation Party", "class of twenty twenty six", "you did it"],
    ["STAR FESTIVAL", "wish upon the summer sky", "lanterns at nine"],
]


def write_sources():
    os.makedirs(os.path.join(ASSETS, "sources"), exist_ok=True)
    det = Det("sources")
    for i, phrases in enumerate(PHRASES):
        canvas_w, canvas_h = 512, 512
        spans = []
        n = len(phrases)
        margin = 24
        slot = (canvas_h - 2 * margin) // n
        for j, text in enumerate(phrases):
            box_h = min(slot - 8, 48 + det.below(40))
            y = margin + j * slot + (slot - box_h) // 2
            x = margin + det.below(32)
            w = canvas_w - x - margin - det.below(32)
            spans.append(
                {
                    "text": text,
                    "color": det.below(128),
                    "font": f"en-{det.below(2)}",
                    "bbox": [x, y, w, box_h],
                    "language": "en",
                }
            )
        doc = {
            "canvas": {"width": canvas_w, "height": canvas_h},
            "background": {"kind": "caption", "caption": CAPTIONS[i % len(CAPTIONS)]},
            "tags": sorted({det.choice(TAGS) for _ in range(3 + det.below(4))}) if det.chance(3, 4) else [],
            "spans": spans,
        }
        path = os.path.join(ASSETS, "sources", f"doc{i:03d}.json")
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(doc, f, ensure_ascii=False, indent=2)
            f.write("\n")


# ---------------------------------------------------------------------------
# Synthetic fonts
# ---------------------------------------------------------------------------

UPM = 1000
ASCENT = 800
DESCENT = -200


def rect(pen, x0, y0, x1, y1):
    x0, y0, x1, y1 = int(x0), int(y0), int(x1), int(y1)
    pen.moveTo((x0, y0))
    pen.lineTo((x1, y0))
    pen.lineTo((x1, y1))
    pen.lineTo((x0, y1))
    pen.closePath()


class Grid:
    """Maps a 0..10 design grid onto the em box of one glyph."""

    def __init__(self, pen, x0, y0, x1, y1, stroke):
        self.pen = pen
        self.x0, self.y0, self.x1, self.y1 = x0, y0, x1, y1
        self.stroke = stroke

    def px(self, gx):
        return self.x0 + (self.x1 - self.x0) * gx / 10.0

    def py(self, gy):
        return self.y0 + (self.y1 - self.y0) * gy / 10.0

    def hline(self, gy, gx0, gx1):
        y = self.py(gy)
        rect(self.pen, self.px(gx0), y - self.stroke / 2, self.px(gx1), y + self.stroke / 2)

    def vline(self, gx, gy0, gy1):
        x = self.px(gx)
        rect(self.pen, x - self.stroke / 2, self.py(gy0), x + self.stroke / 2, self.py(gy1))

    def frame(self, gx0, gy0, gx1, gy1):
        self.hline(gy0, gx0, gx1)
        self.hline(gy1, gx0, gx1)
        self.vline(gx0, gy0, gy1)
        self.vline(gx1, gy0, gy1)


def draw_structured(grid, ch):
    """Hand-drawn stroke layouts for the curated similar-shape characters."""
    if ch == "了":
        grid.hline(9, 2, 8)
        grid.vline(5, 1.5, 9)
        grid.hline(1.5, 3.5, 5)
    elif ch == "子":
        grid.hline(9, 2, 8)
        grid.vline(5, 1.5, 9)
        grid.hline(1.5, 3.5, 5)
        grid.hline(5.5, 1, 9)
    elif ch == "白":
        grid.vline(5, 8.2, 10)
        grid.frame(1.5, 0.5, 8.5, 8.2)
        grid.hline(4.3, 1.5, 8.5)
    elif ch == "自":
        grid.vline(5, 8.2, 10)
        grid.frame(1.5, 0.5, 8.5, 8.2)
        grid.hline(3.1, 1.5, 8.5)
        grid.hline(5.7, 1.5, 8.5)
    elif ch == "间":
        grid.vline(1, 0, 9.5)
        grid.hline(9.5, 1, 9)
        grid.vline(9, 0, 9.5)
        grid.vline(2, 8, 9.5)
        grid.frame(3.2, 2.5, 7.8, 6.5)
        grid.hline(4.5, 3.2, 7.8)
    elif ch == "问":
        grid.vline(1, 0, 9.5)
        grid.hline(9.5, 1, 9)
        grid.vline(9, 0, 9.5)
        grid.vline(2, 8, 9.5)
        grid.frame(3.2, 2.5, 7.8, 6.5)
    elif ch == "觉":
        grid.vline(2.5, 8.2, 10)
        grid.vline(5, 8.4, 10)
        grid.vline(7.5, 8.2, 10)
        grid.hline(7.6, 1, 9)
        grid.frame(2.5, 2.6, 7.5, 7)
        grid.vline(4, 0, 2.6)
        grid.vline(6.2, 0, 2.6)
        grid.hline(0.3, 6.2, 8.5)
    elif ch == "光":
        grid.vline(2.5, 8.2, 10)
        grid.vline(5, 8.4, 10)
        grid.vline(7.5, 8.2, 10)
        grid.hline(7.6, 1, 9)
        grid.hline(5, 1.5, 8.5)
        grid.vline(4, 0.4, 5)
        grid.vline(6.2, 0.4, 5)
        grid.hline(0.4, 6.2, 9)
    elif ch == "星":
        grid.frame(3, 6, 7, 9.6)
        grid.hline(7.8, 3, 7)
        grid.hline(4.6, 2, 8)
        grid.hline(2.6, 2.5, 7.5)
        grid.hline(0.4, 1, 9)
        grid.vline(5, 0.4, 4.6)
    elif ch == "里":
        grid.frame(2.5, 4.4, 7.5, 9.6)
        grid.hline(7, 2.5, 7.5)
        grid.vline(5, 0.4, 9.6)
        grid.hline(2.4, 2.5, 7.5)
        grid.hline(0.4, 1, 9)
    else:
        raise ValueError(ch)


STRUCTURED = {c for pair in SHAPE_OVERRIDES for c in pair}


def draw_hashed(grid, cp, style_seed, dense):
    """Deterministic stroke pattern derived from the codepoint."""
    det = Det(f"glyph/{style_seed}/{cp}")
    nh = 2 + det.below(3)
    nv = 2 + det.below(2)
    if dense:
        nh += 1
    for _ in range(nh):
        gy = 0.5 + det.below(19) * 0.5
        gx0 = det.below(4)
        gx1 = 6 + det.below(5)
        grid.hline(gy, gx0, gx1)
    for _ in range(nv):
        gx = 0.5 + det.below(19) * 0.5
        gy0 = det.below(4)
        gy1 = 6 + det.below(5)
        grid.vline(gx, gy0, gy1)
    if det.chance(1, 3):
        grid.frame(0.5, 0.5, 9.5, 9.5)


def glyph_name(cp):
    return "uni%04X" % cp if cp <= 0xFFFF else "u%05X" % cp


def build_font(path, family, codepoints, stroke, dense, wide_cjk=True):
    cps = sorted(set(codepoints))
    order = [".notdef"] + [glyph_name(cp) for cp in cps]
    fb = FontBuilder(UPM, isTTF=True)
    fb.setupGlyphOrder(order)
    fb.setupCharacterMap({cp: glyph_name(cp) for cp in cps})

    glyphs = {}
    metrics = {}

    pen = TTGlyphPen(None)
    Grid(pen, 100, -100, 560, 760, 60).frame(0, 0, 10, 10)
    glyphs[".notdef"] = pen.glyph()
    metrics[".notdef"] = (660, 100)

    space_like = {0x20, 0xA0, 0x3000}
    for cp in cps:
        name = glyph_name(cp)
        pen = TTGlyphPen(None)
        cjk = cp >= 0x2E80
        adv = 1000 if (cjk and wide_cjk) else 600
        if cp in space_like:
            adv = 1000 if cp == 0x3000 else 500
            glyphs[name] = pen.glyph()
            metrics[name] = (adv, 0)
            continue
        x0, x1 = (80, 920) if adv == 1000 else (60, 540)
        y0, y1 = (-80, 820) if adv == 1000 else (-60, 720)
        grid = Grid(pen, x0, y0, x1, y1, stroke)
        ch = chr(cp)
        if ch in STRUCTURED:
            draw_structured(grid, ch)
        else:
            draw_hashed(grid, cp, family, dense)
        glyphs[name] = pen.glyph()
        metrics[name] = (adv, int(x0))

    fb.setupGlyf(glyphs)
    fb.setupHorizontalMetrics(metrics)
    fb.setupHorizontalHeader(ascent=ASCENT, descent=DESCENT, lineGap=0)
    fb.setupNameTable({"familyName": family, "styleName": "Regular"})
    fb.setupOS2(
        sTypoAscender=ASCENT,
        sTypoDescender=DESCENT,
        sTypoLineGap=0,
        usWinAscent=ASCENT,
        usWinDescent=-DESCENT,
    )
    fb.setupPost()
    # pin the dates so regeneration is reproducible
    fb.font["head"].created = 3650000000
    fb.font["head"].modified = 3650000000
    fb.save(path)


def latin_codepoints(charsets):
    cps = set()
    for lang in ("en", "fr", "es", "de", "pt", "it", "ru"):
        cps.update(ord(c) for c in charsets[lang])
    cps.update(range(0x20, 0x7F))  # ascii printable incl. digits and punctuation
    for extra in "¡¿€«»°±·×—–‘’“”…‰":
        cps.add(ord(extra))
    return cps


def cjk_codepoints(charsets):
    cps = set()
    for lang in ("cn", "jp", "kr"):
        cps.update(ord(c) for c in charsets[lang])
    cps.update(range(0x20, 0x7F))
    cps.add(0x3000)
    for extra in "。、，！？：；（）【】・「」『』％":
        cps.add(ord(extra))
    return cps


def write_fonts(charsets):
    fonts_dir = os.path.join(ASSETS, "fonts")
    os.makedirs(fonts_dir, exist_ok=True)
    latin = latin_codepoints(charsets)
    cjk = cjk_codepoints(charsets)
    build_font(os.path.join(fonts_dir, "GlyphForgeSans-Regular.ttf"), "GlyphForge Sans", latin, 52, False)
    build_font(os.path.join(fonts_dir, "GlyphForgeSans-Display.ttf"), "GlyphForge Sans Display", latin, 92, True)
    build_font(os.path.join(fonts_dir, "GlyphForgeCJK-Regular.ttf"), "GlyphForge CJK", cjk, 56, False)
    build_font(os.path.join(fonts_dir, "GlyphForgeCJK-Display.ttf"), "GlyphForge CJK Display", cjk, 96, True)

    for name in ("DejaVuSans.ttf", "DejaVuSerif.ttf"):
        shutil.copyfile(os.path.join(DEJAVU_DIR, name), os.path.join(fonts_dir, name))
    shutil.copyfile(
        "/usr/share/doc/fonts-dejavu-core/copyright",
        os.path.join(fonts_dir, "LICENSE-DejaVu.txt"),
    )

    manifest = [
        {"id": "en-0", "family": "GlyphForge Sans", "file": "GlyphForgeSans-Regular.ttf", "license": "OFL", "language": "en", "category": "sans"},
        {"id": "en-1", "family": "GlyphForge Sans Display", "file": "GlyphForgeSans-Display.ttf", "license": "OFL", "language": "en", "category": "display"},
        {"id": "en-2", "family": "DejaVu Sans", "file": "DejaVuSans.ttf", "license": "other", "language": "en", "category": "sans"},
        {"id": "en-3", "family": "DejaVu Serif", "file": "DejaVuSerif.ttf", "license": "other", "language": "en", "category": "serif"},
        {"id": "cn-0", "family": "GlyphForge CJK", "file": "GlyphForgeCJK-Regular.ttf", "license": "OFL", "language": "cn", "category": "sans"},
        {"id": "cn-1", "family": "GlyphForge CJK Display", "file": "GlyphForgeCJK-Display.ttf", "license": "OFL", "language": "cn", "category": "display"},
        {"id": "jp-0", "family": "GlyphForge CJK", "file": "GlyphForgeCJK-Regular.ttf", "license": "OFL", "language": "jp", "category": "sans"},
        {"id": "jp-1", "family": "GlyphForge CJK Display", "file": "GlyphForgeCJK-Display.ttf", "license": "OFL", "language": "jp", "category": "display"},
        {"id": "kr-0", "family": "GlyphForge CJK", "file": "GlyphForgeCJK-Regular.ttf", "license": "OFL", "language": "kr", "category": "sans"},
        {"id": "kr-1", "family": "GlyphForge CJK Display", "file": "GlyphForgeCJK-Display.ttf", "license": "OFL", "language": "kr", "category": "display"},
    ]
    with open(os.path.join(fonts_dir, "manifest.json"), "w", newline="\n") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")


def write_test_fixture_fonts():
    os.makedirs(TESTDATA, exist_ok=True)
    az = [ord(c) for c in LATIN_BASE]
    build_font(os.path.join(TESTDATA, "az_only.ttf"), "AZ Only", az, 52, False)

    # a structurally valid font whose cmap maps nothing
    fb = FontBuilder(UPM, isTTF=True)
    fb.setupGlyphOrder([".notdef"])
    fb.setupCharacterMap({})
    pen = TTGlyphPen(None)
    rect(pen, 100, 0, 500, 700)
    fb.setupGlyf({".notdef": pen.glyph()})
    fb.setupHorizontalMetrics({".notdef": (600, 100)})
    fb.setupHorizontalHeader(ascent=ASCENT, descent=DESCENT, lineGap=0)
    fb.setupNameTable({"familyName": "Empty Coverage", "styleName": "Regular"})
    fb.setupOS2()
    fb.setupPost()
    fb.font["head"].created = 3650000000
    fb.font["head"].modified = 3650000000
    fb.save(os.path.join(TESTDATA, "empty_coverage.ttf"))

    with open(os.path.join(TESTDATA, "not_a_font.ttf"), "wb") as f:
        f.write(b"this is not an sfnt container at all\n" * 4)


def main():
    charsets = write_charsets()
    write_vocabs(charsets)
    write_lexicons()
    write_palette()
    write_pools()
    write_sources()
    write_fonts(charsets)
    write_test_fixture_fonts()
    print("assets regenerated under", ASSETS)


if __name__ == "__main__":
    main()
