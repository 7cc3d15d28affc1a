"""Relation banks used to regenerate the bundled datasets.

Pairs are real English words; morphological relations are derived from
base word lists with standard spelling rules (words with irregular or
stress-dependent spellings are simply not listed).
"""

from __future__ import annotations

_VOWELS = set("aeiou")


def _vowel_groups(word: str) -> int:
    groups, in_group = 0, False
    for ch in word:
        if ch in _VOWELS:
            if not in_group:
                groups += 1
            in_group = True
        else:
            in_group = False
    return groups


def _doubles_final(word: str) -> bool:
    # single-syllable consonant-vowel-consonant endings double (plan -> planned)
    if len(word) < 3 or _vowel_groups(word) != 1:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    return c not in _VOWELS and c not in "wxy" and b in _VOWELS and a not in _VOWELS


def pluralize(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in _VOWELS:
        return noun[:-1] + "ies"
    return noun + "s"


third_person = pluralize


def past_tense(verb: str) -> str:
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and verb[-2] not in _VOWELS:
        return verb[:-1] + "ied"
    if _doubles_final(verb):
        return verb + verb[-1] + "ed"
    return verb + "ed"


def gerund(verb: str) -> str:
    if verb.endswith("e") and not verb.endswith("ee"):
        return verb[:-1] + "ing"
    if _doubles_final(verb):
        return verb + verb[-1] + "ing"
    return verb + "ing"


def comparative(adj: str) -> str:
    if adj.endswith("e"):
        return adj + "r"
    if adj.endswith("y") and adj[-2] not in _VOWELS:
        return adj[:-1] + "ier"
    if _doubles_final(adj):
        return adj + adj[-1] + "er"
    return adj + "er"


def superlative(adj: str) -> str:
    if adj.endswith("e"):
        return adj + "st"
    if adj.endswith("y") and adj[-2] not in _VOWELS:
        return adj[:-1] + "iest"
    if _doubles_final(adj):
        return adj + adj[-1] + "est"
    return adj + "est"


def adverb(adj: str) -> str:
    if adj.endswith("le") and adj[-3] not in _VOWELS:
        return adj[:-1] + "y"
    if adj.endswith("ic"):
        return adj + "ally"
    if adj.endswith("y") and adj[-2] not in _VOWELS:
        return adj[:-1] + "ily"
    return adj + "ly"


def nounness(adj: str) -> str:
    if adj.endswith("y") and adj[-2] not in _VOWELS and len(adj) > 3:
        return adj[:-1] + "iness"
    return adj + "ness"


NOUNS = """
apple arm artist aunt bag ball band bank basket bath beach bed bell bird boat
book bottle bowl box boy branch bridge brother brush bucket building bus cake
camera camp candle cap card carpet cart castle cat chair chain cheek chest
church circle city class clock cloud coat coin corner cottage country cousin
crowd cup curtain desk dish doctor dog doll door dream dress driver drum duck
eagle ear egg engine eye face factory farm farmer father field finger flag
floor flower forest fork fox friend frog game garden gate girl glass glove
goat guest guitar hand harbor hat heart hill horse hotel hour house hunter
island jacket jar job journey judge key king kitchen kite ladder lake lamp
leg lemon letter library lion lip list market meal member message mirror
monkey month moon morning mother mountain mouth movie museum nail name neck
needle nest night nose notebook number nurse ocean office onion orange oven
owl page painter palace paper parent park party path pencil photo piano
picture pillow pilot plan plane planet plate pocket poem pond prince problem
puzzle queen question rabbit radio raincoat report ring river road rock roof
room rope rose sailor school scientist sea seat shadow sheet ship shirt shoe
shop shoulder singer sister snake sock soldier song spider spoon spring
square stamp star station stick stone store storm story stream street student
summer table tail teacher team tent ticket tiger toe tool towel tower town
toy train tray tree truck tunnel uncle valley village violin wall watch wave
wheel window wing winter worker world yard zoo
""".split()

IRREGULAR_PLURALS = [
    ("man", "men"), ("woman", "women"), ("child", "children"), ("foot", "feet"),
    ("tooth", "teeth"), ("goose", "geese"), ("mouse", "mice"), ("person", "people"),
    ("ox", "oxen"), ("leaf", "leaves"), ("wolf", "wolves"), ("knife", "knives"),
    ("life", "lives"), ("wife", "wives"), ("loaf", "loaves"), ("shelf", "shelves"),
    ("thief", "thieves"), ("half", "halves"), ("scarf", "scarves"), ("calf", "calves"),
    ("elf", "elves"), ("cactus", "cacti"), ("focus", "foci"), ("fungus", "fungi"),
    ("nucleus", "nuclei"), ("analysis", "analyses"), ("crisis", "crises"),
    ("thesis", "theses"), ("basis", "bases"), ("oasis", "oases"), ("datum", "data"),
    ("medium", "media"), ("curriculum", "curricula"), ("criterion", "criteria"),
    ("phenomenon", "phenomena"),
]

VERBS = """
accept add agree aim allow announce answer appear argue arrange arrive ask
attack attend avoid bake balance beg behave believe belong blame boil borrow
bounce brush burn bury call camp care carry cause change charge chase cheer
chew claim clean clear climb close collect comb compare complain complete
cook copy count cover crawl cross cry dance decide declare decorate delay
deliver describe destroy disagree discover discuss divide dream dress drop
dry earn encourage enjoy enter escape examine expect explain explore fail
fasten fetch fill finish fix float flow fold follow force gather glance glue
grab greet guard guess guide hammer hand handle happen harvest hate heal
help hike hope hug hunt hurry imagine improve include increase invent invite
iron join jump kick kiss knock land laugh learn lift like listen live load
lock look love manage march mark marry measure melt mention mix move need
notice obey offer open order own pack paint pass pause perform pick place plan
plant play please point polish pour practice praise prepare press pretend
print promise protect provide pull push race rain raise reach receive
recognize record refuse relax remain remember remind remove rent repair
repeat reply rescue rest return roar roll rub rush sail save scream search
seem serve share shout sign smile snow sound start stay step stir study
suggest supply support surprise talk taste thank tidy touch travel trust try
turn type use visit wait walk wander want warm warn wash watch water wave
whisper wish wonder work worry wrap yell
""".split()

IRREGULAR_PASTS = [
    ("go", "went"), ("eat", "ate"), ("see", "saw"), ("take", "took"),
    ("give", "gave"), ("come", "came"), ("run", "ran"), ("sit", "sat"),
    ("stand", "stood"), ("speak", "spoke"), ("break", "broke"), ("choose", "chose"),
    ("drive", "drove"), ("ride", "rode"), ("rise", "rose"), ("write", "wrote"),
    ("sing", "sang"), ("ring", "rang"), ("drink", "drank"), ("swim", "swam"),
    ("begin", "began"), ("fly", "flew"), ("grow", "grew"), ("know", "knew"),
    ("throw", "threw"), ("draw", "drew"), ("blow", "blew"), ("wear", "wore"),
    ("tear", "tore"), ("steal", "stole"), ("freeze", "froze"), ("catch", "caught"),
    ("teach", "taught"), ("buy", "bought"), ("bring", "brought"), ("think", "thought"),
    ("fight", "fought"), ("seek", "sought"), ("sell", "sold"), ("tell", "told"),
    ("say", "said"), ("pay", "paid"), ("make", "made"), ("hear", "heard"),
    ("hold", "held"), ("keep", "kept"), ("sleep", "slept"), ("sweep", "swept"),
    ("weep", "wept"), ("feel", "felt"), ("leave", "left"), ("meet", "met"),
    ("lose", "lost"), ("shoot", "shot"), ("win", "won"), ("find", "found"),
    ("fall", "fell"), ("bite", "bit"), ("hide", "hid"), ("forget", "forgot"),
    ("forgive", "forgave"),
]

GRADABLE_ADJS = """
tall short long strong weak old young small quick slow fast bright dark
heavy happy angry busy dirty easy early funny healthy hungry lazy lucky
noisy pretty sunny tidy tiny ugly windy cloudy rainy wealthy cheap clean
clear cold cool warm hot big thin flat sad wet deep steep high low loud
proud rich poor rough smooth soft hard sharp dull sweet brave calm fierce
fresh full great green kind late near neat new nice plain quiet round safe
simple slim smart strange strict sturdy tame thick tight tough wide wild wise
""".split()

ADVERB_ADJS = """
quick slow loud quiet brave calm careful careless cheerful clear clever
correct dangerous eager exact fair faithful fierce fluent foolish frequent
gentle glad graceful gradual happy harsh honest hopeful humble instant
joyful kind lazy loyal lucky neat nervous noble obvious patient perfect
polite proud rapid rare recent rude sad safe secret serious sharp silent
sincere slight smooth soft strange strict strong sudden sweet swift tender
thoughtful tight typical usual vague warm weak wise
""".split()

NESS_ADJS = """
aware bitter bold bright calm careless cheerful cold dark deaf eager empty
fair faithful fit fond forgetful fresh gentle good great happy hard harsh
helpful helpless hollow holy kind late lazy light lonely loud mad meek mild
neat nervous numb open polite quick quiet ready rich ripe rude sad selfish
serious sharp sick slow smooth soft sore stiff still sweet thick thorough
tight tough vague vast weak wet white whole wild
""".split()

UN_ADJS = """
able afraid aware certain clear comfortable common conscious cooked easy
equal even fair familiar fit fortunate friendly grateful happy healthy
helpful important kind known likely lucky necessary official pleasant
popular prepared real reasonable related reliable safe selfish stable
steady sure tidy true usual willing wise
""".split()

RE_VERBS = """
appear arrange build calculate check connect consider count create design
discover draw enter examine fill gain group heat join load locate make
marry name number open order organize pack paint place play print read
schedule start tell think try turn use view visit write
""".split()

LESS_NOUNS = """
aim care cloud color doubt dust effort end fault fear flaw friend harm
heart help home hope job law life limit meaning mind motion noise pain
point power rest seam seed sense shame shape sleep smoke speech spot stain
taste thought time tire tooth use voice weight wire worth
""".split()

ABLE_VERBS = """
accept adjust admire adore afford answer avoid bear believe break climb
comfort compare consider count debate depend desire detect download drink
eat enjoy excuse expand explain fix honor imagine laugh love measure move
note obtain pardon pass predict prevent print question reach read reason
remark remove renew repair repeat respect return search stack suit teach
touch train transport trust value wash
""".split()

AGENT_VERBS = """
bake build buy call catch clean climb command dance defend design dream
drive drum employ explore farm fight follow garden help hunt jump keep
kill lead learn lend listen manage mine own paint perform photograph play
print produce publish read report ride rule run sing speak swim teach
train travel wait walk win work write
""".split()

COUNTRY_CAPITAL = [
    ("afghanistan", "kabul"), ("albania", "tirana"), ("algeria", "algiers"),
    ("australia", "canberra"), ("austria", "vienna"), ("belgium", "brussels"),
    ("brazil", "brasilia"), ("bulgaria", "sofia"), ("canada", "ottawa"),
    ("chile", "santiago"), ("china", "beijing"), ("colombia", "bogota"),
    ("croatia", "zagreb"), ("cuba", "havana"), ("denmark", "copenhagen"),
    ("ecuador", "quito"), ("egypt", "cairo"), ("england", "london"),
    ("estonia", "tallinn"), ("finland", "helsinki"), ("france", "paris"),
    ("georgia", "tbilisi"), ("germany", "berlin"), ("ghana", "accra"),
    ("greece", "athens"), ("hungary", "budapest"), ("iceland", "reykjavik"),
    ("india", "delhi"), ("indonesia", "jakarta"), ("iran", "tehran"),
    ("iraq", "baghdad"), ("ireland", "dublin"), ("israel", "jerusalem"),
    ("italy", "rome"), ("jamaica", "kingston"), ("japan", "tokyo"),
    ("jordan", "amman"), ("kenya", "nairobi"), ("laos", "vientiane"),
    ("latvia", "riga"), ("lebanon", "beirut"), ("libya", "tripoli"),
    ("lithuania", "vilnius"), ("mongolia", "ulaanbaatar"), ("morocco", "rabat"),
    ("nepal", "kathmandu"), ("netherlands", "amsterdam"), ("nigeria", "abuja"),
    ("norway", "oslo"), ("pakistan", "islamabad"), ("peru", "lima"),
    ("philippines", "manila"), ("poland", "warsaw"), ("portugal", "lisbon"),
    ("romania", "bucharest"), ("russia", "moscow"), ("senegal", "dakar"),
    ("serbia", "belgrade"), ("slovakia", "bratislava"), ("somalia", "mogadishu"),
    ("spain", "madrid"), ("sweden", "stockholm"), ("switzerland", "bern"),
    ("syria", "damascus"), ("thailand", "bangkok"), ("tunisia", "tunis"),
    ("turkey", "ankara"), ("uganda", "kampala"), ("ukraine", "kyiv"),
    ("uruguay", "montevideo"), ("venezuela", "caracas"), ("vietnam", "hanoi"),
    ("zimbabwe", "harare"),
]

COUNTRY_CURRENCY = [
    ("argentina", "peso"), ("brazil", "real"), ("bulgaria", "lev"),
    ("canada", "dollar"), ("china", "yuan"), ("croatia", "kuna"),
    ("denmark", "krone"), ("england", "pound"), ("ethiopia", "birr"),
    ("hungary", "forint"), ("india", "rupee"), ("iran", "rial"),
    ("israel", "shekel"), ("japan", "yen"), ("kenya", "shilling"),
    ("malaysia", "ringgit"), ("mongolia", "tugrik"), ("nigeria", "naira"),
    ("peru", "sol"), ("poland", "zloty"), ("russia", "ruble"),
    ("botswana", "pula"), ("sweden", "krona"), ("thailand", "baht"),
    ("turkey", "lira"), ("ukraine", "hryvnia"), ("vietnam", "dong"),
    ("zambia", "kwacha"), ("guatemala", "quetzal"), ("bangladesh", "taka"),
]

COUNTRY_LANGUAGE = [
    ("argentina", "spanish"), ("austria", "german"), ("brazil", "portuguese"),
    ("bulgaria", "bulgarian"), ("china", "mandarin"), ("denmark", "danish"),
    ("egypt", "arabic"), ("england", "english"), ("ethiopia", "amharic"),
    ("finland", "finnish"), ("france", "french"), ("germany", "german"),
    ("greece", "greek"), ("hungary", "hungarian"), ("iceland", "icelandic"),
    ("india", "hindi"), ("indonesia", "indonesian"), ("iran", "persian"),
    ("israel", "hebrew"), ("italy", "italian"), ("japan", "japanese"),
    ("kenya", "swahili"), ("mexico", "spanish"), ("mongolia", "mongolian"),
    ("netherlands", "dutch"), ("norway", "norwegian"), ("pakistan", "urdu"),
    ("poland", "polish"), ("portugal", "portuguese"), ("romania", "romanian"),
    ("russia", "russian"), ("somalia", "somali"), ("spain", "spanish"),
    ("sweden", "swedish"), ("thailand", "thai"), ("turkey", "turkish"),
    ("vietnam", "vietnamese"),
]

COUNTRY_DEMONYM = [
    ("america", "american"), ("brazil", "brazilian"), ("canada", "canadian"),
    ("china", "chinese"), ("egypt", "egyptian"), ("england", "english"),
    ("france", "french"), ("germany", "german"), ("greece", "greek"),
    ("hungary", "hungarian"), ("iceland", "icelandic"), ("india", "indian"),
    ("ireland", "irish"), ("italy", "italian"), ("japan", "japanese"),
    ("kenya", "kenyan"), ("mexico", "mexican"), ("morocco", "moroccan"),
    ("norway", "norwegian"), ("peru", "peruvian"), ("poland", "polish"),
    ("portugal", "portuguese"), ("russia", "russian"), ("spain", "spanish"),
    ("sweden", "swedish"), ("switzerland", "swiss"), ("thailand", "thai"),
    ("turkey", "turkish"), ("vietnam", "vietnamese"), ("chile", "chilean"),
]

STATE_CAPITAL = [
    ("alabama", "montgomery"), ("alaska", "juneau"), ("arizona", "phoenix"),
    ("california", "sacramento"), ("colorado", "denver"), ("connecticut", "hartford"),
    ("delaware", "dover"), ("florida", "tallahassee"), ("hawaii", "honolulu"),
    ("idaho", "boise"), ("illinois", "springfield"), ("indiana", "indianapolis"),
    ("kansas", "topeka"), ("kentucky", "frankfort"), ("maine", "augusta"),
    ("maryland", "annapolis"), ("massachusetts", "boston"), ("michigan", "lansing"),
    ("mississippi", "jackson"), ("missouri", "jefferson"), ("montana", "helena"),
    ("nebraska", "lincoln"), ("ohio", "columbus"), ("oregon", "salem"),
    ("pennsylvania", "harrisburg"), ("tennessee", "nashville"), ("texas", "austin"),
    ("vermont", "montpelier"), ("virginia", "richmond"), ("washington", "olympia"),
    ("wisconsin", "madison"), ("wyoming", "cheyenne"),
]

ANIMAL_YOUNG = [
    ("dog", "puppy"), ("cat", "kitten"), ("cow", "calf"), ("horse", "foal"),
    ("sheep", "lamb"), ("goat", "kid"), ("pig", "piglet"), ("bear", "cub"),
    ("deer", "fawn"), ("frog", "tadpole"), ("hen", "chick"), ("duck", "duckling"),
    ("goose", "gosling"), ("swan", "cygnet"), ("kangaroo", "joey"),
    ("eagle", "eaglet"), ("owl", "owlet"), ("seal", "pup"), ("whale", "calf"),
    ("fox", "kit"), ("rabbit", "bunny"), ("elephant", "calf"), ("lion", "cub"),
    ("tiger", "cub"), ("butterfly", "caterpillar"), ("salmon", "fry"),
]

ANIMAL_SOUND = [
    ("dog", "bark"), ("cat", "meow"), ("cow", "moo"), ("horse", "neigh"),
    ("sheep", "bleat"), ("lion", "roar"), ("wolf", "howl"), ("snake", "hiss"),
    ("bee", "buzz"), ("owl", "hoot"), ("duck", "quack"), ("pig", "oink"),
    ("frog", "croak"), ("crow", "caw"), ("elephant", "trumpet"),
    ("donkey", "bray"), ("turkey", "gobble"), ("hen", "cluck"),
    ("dove", "coo"), ("mouse", "squeak"),
]

ANIMAL_HOME = [
    ("bird", "nest"), ("bee", "hive"), ("bear", "den"), ("rabbit", "burrow"),
    ("fox", "lair"), ("spider", "web"), ("horse", "stable"), ("pig", "sty"),
    ("dog", "kennel"), ("cow", "barn"), ("chicken", "coop"), ("wolf", "den"),
    ("beaver", "lodge"), ("snail", "shell"), ("ant", "anthill"),
]

MALE_FEMALE = [
    ("king", "queen"), ("man", "woman"), ("boy", "girl"), ("father", "mother"),
    ("son", "daughter"), ("brother", "sister"), ("uncle", "aunt"),
    ("nephew", "niece"), ("husband", "wife"), ("prince", "princess"),
    ("actor", "actress"), ("waiter", "waitress"), ("host", "hostess"),
    ("lion", "lioness"), ("tiger", "tigress"), ("duke", "duchess"),
    ("emperor", "empress"), ("hero", "heroine"), ("god", "goddess"),
    ("bull", "cow"), ("rooster", "hen"), ("stallion", "mare"), ("ram", "ewe"),
    ("drake", "duck"), ("gander", "goose"), ("groom", "bride"),
    ("sir", "madam"), ("monk", "nun"), ("wizard", "witch"), ("lad", "lass"),
]

JOB_WORKPLACE = [
    ("teacher", "school"), ("doctor", "hospital"), ("chef", "kitchen"),
    ("pilot", "cockpit"), ("farmer", "farm"), ("judge", "courtroom"),
    ("librarian", "library"), ("actor", "theater"), ("scientist", "laboratory"),
    ("mechanic", "garage"), ("banker", "bank"), ("professor", "university"),
    ("sailor", "ship"), ("astronaut", "spacecraft"), ("miner", "mine"),
    ("waiter", "restaurant"), ("nurse", "clinic"), ("barber", "barbershop"),
    ("pharmacist", "pharmacy"), ("clerk", "office"), ("baker", "bakery"),
    ("blacksmith", "forge"), ("monk", "monastery"), ("artist", "studio"),
    ("gardener", "garden"),
]

INSTRUMENT_PLAYER = [
    ("piano", "pianist"), ("violin", "violinist"), ("guitar", "guitarist"),
    ("drum", "drummer"), ("flute", "flutist"), ("cello", "cellist"),
    ("trumpet", "trumpeter"), ("harp", "harpist"), ("organ", "organist"),
    ("saxophone", "saxophonist"),
]

THING_COLOR = [
    ("grass", "green"), ("sky", "blue"), ("snow", "white"), ("coal", "black"),
    ("blood", "red"), ("lemon", "yellow"), ("pumpkin", "orange"),
    ("grape", "purple"), ("chocolate", "brown"), ("flamingo", "pink"),
    ("emerald", "green"), ("ruby", "red"), ("sapphire", "blue"),
    ("charcoal", "gray"), ("banana", "yellow"), ("cherry", "red"),
]

NUMBER_ORDINAL = [
    ("one", "first"), ("two", "second"), ("three", "third"), ("four", "fourth"),
    ("five", "fifth"), ("six", "sixth"), ("seven", "seventh"), ("eight", "eighth"),
    ("nine", "ninth"), ("ten", "tenth"), ("eleven", "eleventh"),
    ("twelve", "twelfth"), ("thirteen", "thirteenth"), ("fourteen", "fourteenth"),
    ("fifteen", "fifteenth"), ("sixteen", "sixteenth"), ("seventeen", "seventeenth"),
    ("eighteen", "eighteenth"), ("nineteen", "nineteenth"), ("twenty", "twentieth"),
]

ANTONYMS_GRADABLE = [
    ("hot", "cold"), ("big", "small"), ("fast", "slow"), ("happy", "sad"),
    ("light", "dark"), ("rich", "poor"), ("strong", "weak"), ("tall", "short"),
    ("young", "old"), ("early", "late"), ("hard", "soft"), ("clean", "dirty"),
    ("wide", "narrow"), ("deep", "shallow"), ("cheap", "expensive"),
    ("smooth", "rough"), ("loud", "quiet"), ("sharp", "dull"),
    ("tight", "loose"), ("thick", "thin"), ("sweet", "sour"),
    ("fresh", "stale"), ("brave", "cowardly"), ("generous", "stingy"),
    ("humble", "arrogant"), ("rigid", "flexible"), ("wet", "dry"),
    ("high", "low"), ("near", "far"), ("ancient", "modern"),
    ("noisy", "silent"), ("smart", "foolish"), ("brief", "lengthy"),
    ("calm", "anxious"), ("cruel", "gentle"), ("dense", "sparse"),
    ("eager", "reluctant"), ("fat", "skinny"), ("polite", "rude"),
    ("proud", "ashamed"), ("rare", "common"), ("safe", "dangerous"),
    ("simple", "complex"), ("strict", "lenient"), ("heavy", "light"),
]

ANTONYMS_BINARY = [
    ("up", "down"), ("open", "closed"), ("begin", "end"), ("buy", "sell"),
    ("win", "lose"), ("accept", "reject"), ("above", "below"),
    ("inside", "outside"), ("before", "after"), ("arrive", "depart"),
    ("love", "hate"), ("push", "pull"), ("give", "take"), ("lend", "borrow"),
    ("question", "answer"), ("laugh", "cry"), ("day", "night"),
    ("summer", "winter"), ("north", "south"), ("east", "west"),
    ("left", "right"), ("true", "false"), ("presence", "absence"),
    ("entrance", "exit"), ("import", "export"), ("attack", "defend"),
    ("forward", "backward"), ("maximum", "minimum"), ("majority", "minority"),
    ("victory", "defeat"), ("guilty", "innocent"), ("visible", "invisible"),
    ("alive", "dead"), ("asleep", "awake"), ("always", "never"),
    ("everything", "nothing"), ("everyone", "nobody"), ("remember", "forget"),
    ("appear", "vanish"), ("whisper", "shout"),
]

SYNONYMS_COMMON = [
    ("big", "large"), ("small", "tiny"), ("fast", "quick"), ("smart", "clever"),
    ("happy", "glad"), ("sad", "unhappy"), ("angry", "furious"),
    ("begin", "start"), ("end", "finish"), ("buy", "purchase"),
    ("speak", "talk"), ("shut", "close"), ("aid", "help"),
    ("error", "mistake"), ("street", "road"), ("automobile", "car"),
    ("couch", "sofa"), ("kid", "child"), ("gift", "present"), ("ill", "sick"),
    ("silent", "quiet"), ("correct", "right"), ("difficult", "hard"),
    ("easy", "simple"), ("rare", "scarce"), ("rich", "wealthy"),
    ("brave", "courageous"), ("famous", "renowned"), ("strange", "odd"),
    ("entire", "whole"), ("vacant", "empty"), ("rapid", "swift"),
    ("slender", "thin"), ("feeble", "weak"), ("grateful", "thankful"),
    ("honest", "truthful"), ("enormous", "huge"), ("ancient", "old"),
    ("tired", "weary"), ("afraid", "scared"),
]

SYNONYMS_INTENSITY = [
    ("good", "excellent"), ("bad", "terrible"), ("cold", "freezing"),
    ("hot", "scorching"), ("big", "gigantic"), ("happy", "ecstatic"),
    ("sad", "miserable"), ("angry", "livid"), ("tired", "exhausted"),
    ("hungry", "starving"), ("scared", "terrified"), ("surprised", "astonished"),
    ("funny", "hilarious"), ("pretty", "gorgeous"), ("dirty", "filthy"),
    ("clean", "spotless"), ("smart", "brilliant"), ("old", "ancient"),
    ("interesting", "fascinating"), ("wet", "soaked"), ("dry", "parched"),
    ("bright", "dazzling"), ("loud", "deafening"), ("small", "microscopic"),
    ("warm", "boiling"),
]

HYPERNYMS_ANIMALS = [
    ("dog", "mammal"), ("sparrow", "bird"), ("eagle", "bird"),
    ("salmon", "fish"), ("trout", "fish"), ("shark", "fish"),
    ("snake", "reptile"), ("lizard", "reptile"), ("turtle", "reptile"),
    ("frog", "amphibian"), ("toad", "amphibian"), ("ant", "insect"),
    ("bee", "insect"), ("beetle", "insect"), ("butterfly", "insect"),
    ("spider", "arachnid"), ("crab", "crustacean"), ("lobster", "crustacean"),
    ("whale", "mammal"), ("dolphin", "mammal"), ("bat", "mammal"),
    ("bear", "mammal"), ("wolf", "mammal"), ("owl", "bird"),
    ("penguin", "bird"), ("robin", "bird"),
]

HYPERNYMS_MISC = [
    ("rose", "flower"), ("tulip", "flower"), ("daisy", "flower"),
    ("oak", "tree"), ("pine", "tree"), ("maple", "tree"),
    ("apple", "fruit"), ("banana", "fruit"), ("mango", "fruit"),
    ("carrot", "vegetable"), ("potato", "vegetable"), ("spinach", "vegetable"),
    ("hammer", "tool"), ("wrench", "tool"), ("chisel", "tool"),
    ("violin", "instrument"), ("trumpet", "instrument"), ("drum", "instrument"),
    ("soccer", "sport"), ("tennis", "sport"), ("hockey", "sport"),
    ("chess", "game"), ("poker", "game"), ("novel", "book"),
    ("dictionary", "book"), ("sedan", "car"), ("truck", "vehicle"),
    ("bus", "vehicle"), ("bicycle", "vehicle"), ("copper", "metal"),
    ("iron", "metal"), ("gold", "metal"), ("granite", "rock"),
    ("marble", "rock"), ("cotton", "fabric"), ("silk", "fabric"),
    ("wool", "fabric"), ("chair", "furniture"), ("desk", "furniture"),
    ("wardrobe", "furniture"), ("shirt", "garment"), ("jacket", "garment"),
]

HYPONYMS = [
    ("flower", "rose"), ("tree", "oak"), ("fruit", "apple"),
    ("vegetable", "carrot"), ("tool", "hammer"), ("instrument", "violin"),
    ("sport", "soccer"), ("game", "chess"), ("book", "novel"),
    ("vehicle", "truck"), ("metal", "copper"), ("rock", "granite"),
    ("fabric", "cotton"), ("furniture", "chair"), ("garment", "shirt"),
    ("bird", "sparrow"), ("fish", "salmon"), ("reptile", "snake"),
    ("insect", "ant"), ("mammal", "whale"), ("color", "red"),
    ("month", "april"), ("weekday", "monday"), ("season", "summer"),
    ("beverage", "coffee"), ("meal", "breakfast"), ("dance", "waltz"),
    ("language", "french"), ("currency", "peso"), ("flower", "tulip"),
]

MERONYMS = [
    ("wheel", "car"), ("page", "book"), ("branch", "tree"),
    ("petal", "flower"), ("finger", "hand"), ("toe", "foot"),
    ("sleeve", "shirt"), ("blade", "knife"), ("lens", "camera"),
    ("wing", "airplane"), ("sail", "boat"), ("roof", "house"),
    ("screen", "phone"), ("feather", "bird"), ("scale", "fish"),
    ("yolk", "egg"), ("core", "apple"), ("crust", "bread"),
    ("spoke", "wheel"), ("keyboard", "computer"), ("pedal", "bicycle"),
    ("drawer", "desk"), ("pocket", "jacket"), ("button", "shirt"),
    ("handle", "door"), ("step", "staircase"), ("rung", "ladder"),
    ("link", "chain"), ("bead", "necklace"), ("leaf", "tree"),
]

MEMBER_COLLECTION = [
    ("wolf", "pack"), ("fish", "school"), ("bird", "flock"),
    ("bee", "swarm"), ("lion", "pride"), ("cow", "herd"),
    ("ship", "fleet"), ("soldier", "army"), ("player", "team"),
    ("musician", "orchestra"), ("singer", "choir"), ("star", "constellation"),
    ("tree", "forest"), ("island", "archipelago"), ("card", "deck"),
    ("grape", "bunch"), ("flower", "bouquet"), ("sheep", "flock"),
    ("ant", "colony"), ("actor", "cast"), ("judge", "panel"),
    ("student", "class"),
]
