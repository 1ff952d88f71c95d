#!/usr/bin/env python3
"""Regenerate src/zhbraille/data/lexicon.tsv from the curated tables below.

The lexicon is hand-curated reference data: ~520 common characters with
tone-number readings, heteronym rows, a dense block of characters all
pronounced "yi" (the classic homophone pile-up), and ~260 common words.
Frequencies follow a Zipf-style rank formula; heteronym rows take a
fraction of their character's primary frequency.

The script validates everything before writing:
  * every pinyin token parses against the syllable grammar,
  * every word reading is consistent with its characters' readings,
  * more than 100 characters read "yi" in some tone,
  * the shipped scheme covers every initial and final used here.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from zhbraille.pinyin import parse_pinyin  # noqa: E402
from zhbraille.scheme import load_scheme_file  # noqa: E402

# (character, primary reading), ordered by estimated frequency rank.
CHARS = [
    ("的", "de5"), ("一", "yi1"), ("是", "shi4"), ("不", "bu4"), ("了", "le5"),
    ("在", "zai4"), ("人", "ren2"), ("有", "you3"), ("我", "wo3"), ("他", "ta1"),
    ("这", "zhe4"), ("个", "ge4"), ("们", "men5"), ("中", "zhong1"), ("来", "lai2"),
    ("上", "shang4"), ("大", "da4"), ("为", "wei4"), ("和", "he2"), ("国", "guo2"),
    ("地", "di4"), ("到", "dao4"), ("以", "yi3"), ("说", "shuo1"), ("时", "shi2"),
    ("要", "yao4"), ("就", "jiu4"), ("出", "chu1"), ("会", "hui4"), ("可", "ke3"),
    ("也", "ye3"), ("你", "ni3"), ("对", "dui4"), ("生", "sheng1"), ("能", "neng2"),
    ("而", "er2"), ("子", "zi3"), ("那", "na4"), ("得", "de5"), ("于", "yu2"),
    ("着", "zhe5"), ("下", "xia4"), ("自", "zi4"), ("之", "zhi1"), ("年", "nian2"),
    ("过", "guo4"), ("发", "fa1"), ("后", "hou4"), ("作", "zuo4"), ("里", "li3"),
    ("用", "yong4"), ("道", "dao4"), ("行", "xing2"), ("所", "suo3"), ("然", "ran2"),
    ("家", "jia1"), ("种", "zhong3"), ("事", "shi4"), ("成", "cheng2"), ("方", "fang1"),
    ("多", "duo1"), ("经", "jing1"), ("么", "me5"), ("去", "qu4"), ("法", "fa3"),
    ("学", "xue2"), ("如", "ru2"), ("都", "dou1"), ("同", "tong2"), ("现", "xian4"),
    ("当", "dang1"), ("没", "mei2"), ("动", "dong4"), ("面", "mian4"), ("起", "qi3"),
    ("看", "kan4"), ("定", "ding4"), ("天", "tian1"), ("分", "fen1"), ("还", "hai2"),
    ("进", "jin4"), ("好", "hao3"), ("小", "xiao3"), ("部", "bu4"), ("其", "qi2"),
    ("些", "xie1"), ("主", "zhu3"), ("样", "yang4"), ("理", "li3"), ("心", "xin1"),
    ("她", "ta1"), ("本", "ben3"), ("前", "qian2"), ("开", "kai1"), ("但", "dan4"),
    ("因", "yin1"), ("只", "zhi3"), ("从", "cong2"), ("想", "xiang3"), ("实", "shi2"),
    ("日", "ri4"), ("军", "jun1"), ("者", "zhe3"), ("意", "yi4"), ("无", "wu2"),
    ("力", "li4"), ("它", "ta1"), ("与", "yu3"), ("长", "chang2"), ("把", "ba3"),
    ("机", "ji1"), ("十", "shi2"), ("民", "min2"), ("第", "di4"), ("公", "gong1"),
    ("此", "ci3"), ("已", "yi3"), ("工", "gong1"), ("使", "shi3"), ("情", "qing2"),
    ("明", "ming2"), ("性", "xing4"), ("知", "zhi1"), ("全", "quan2"), ("三", "san1"),
    ("又", "you4"), ("关", "guan1"), ("点", "dian3"), ("正", "zheng4"), ("业", "ye4"),
    ("外", "wai4"), ("将", "jiang1"), ("两", "liang3"), ("高", "gao1"), ("间", "jian1"),
    ("由", "you2"), ("问", "wen4"), ("很", "hen3"), ("最", "zui4"), ("重", "zhong4"),
    ("并", "bing4"), ("物", "wu4"), ("手", "shou3"), ("应", "ying1"), ("战", "zhan4"),
    ("向", "xiang4"), ("头", "tou2"), ("文", "wen2"), ("体", "ti3"), ("政", "zheng4"),
    ("美", "mei3"), ("相", "xiang1"), ("见", "jian4"), ("被", "bei4"), ("利", "li4"),
    ("什", "shen2"), ("二", "er4"), ("等", "deng3"), ("产", "chan3"), ("或", "huo4"),
    ("新", "xin1"), ("己", "ji3"), ("制", "zhi4"), ("身", "shen1"), ("果", "guo3"),
    ("加", "jia1"), ("西", "xi1"), ("斯", "si1"), ("月", "yue4"), ("话", "hua4"),
    ("合", "he2"), ("回", "hui2"), ("特", "te4"), ("代", "dai4"), ("内", "nei4"),
    ("信", "xin4"), ("表", "biao3"), ("化", "hua4"), ("老", "lao3"), ("给", "gei3"),
    ("世", "shi4"), ("位", "wei4"), ("次", "ci4"), ("度", "du4"), ("门", "men2"),
    ("任", "ren4"), ("常", "chang2"), ("先", "xian1"), ("海", "hai3"), ("通", "tong1"),
    ("教", "jiao4"), ("儿", "er2"), ("原", "yuan2"), ("东", "dong1"), ("声", "sheng1"),
    ("提", "ti2"), ("立", "li4"), ("及", "ji2"), ("比", "bi3"), ("员", "yuan2"),
    ("解", "jie3"), ("水", "shui3"), ("名", "ming2"), ("真", "zhen1"), ("论", "lun4"),
    ("处", "chu4"), ("走", "zou3"), ("义", "yi4"), ("各", "ge4"), ("入", "ru4"),
    ("几", "ji3"), ("口", "kou3"), ("认", "ren4"), ("条", "tiao2"), ("平", "ping2"),
    ("系", "xi4"), ("气", "qi4"), ("题", "ti2"), ("活", "huo2"), ("尔", "er3"),
    ("更", "geng4"), ("别", "bie2"), ("打", "da3"), ("女", "nv3"), ("变", "bian4"),
    ("四", "si4"), ("神", "shen2"), ("总", "zong3"), ("何", "he2"), ("电", "dian4"),
    ("数", "shu4"), ("安", "an1"), ("少", "shao3"), ("报", "bao4"), ("才", "cai2"),
    ("结", "jie2"), ("反", "fan3"), ("受", "shou4"), ("目", "mu4"), ("太", "tai4"),
    ("量", "liang4"), ("再", "zai4"), ("感", "gan3"), ("建", "jian4"), ("务", "wu4"),
    ("做", "zuo4"), ("接", "jie1"), ("必", "bi4"), ("场", "chang3"), ("件", "jian4"),
    ("计", "ji4"), ("管", "guan3"), ("期", "qi1"), ("市", "shi4"), ("直", "zhi2"),
    ("德", "de2"), ("资", "zi1"), ("命", "ming4"), ("山", "shan1"), ("金", "jin1"),
    ("指", "zhi3"), ("克", "ke4"), ("许", "xu3"), ("统", "tong3"), ("区", "qu1"),
    ("保", "bao3"), ("至", "zhi4"), ("队", "dui4"), ("形", "xing2"), ("社", "she4"),
    ("便", "bian4"), ("空", "kong1"), ("决", "jue2"), ("治", "zhi4"), ("展", "zhan3"),
    ("马", "ma3"), ("科", "ke1"), ("司", "si1"), ("五", "wu3"), ("基", "ji1"),
    ("眼", "yan3"), ("书", "shu1"), ("非", "fei1"), ("则", "ze2"), ("听", "ting1"),
    ("白", "bai2"), ("却", "que4"), ("界", "jie4"), ("达", "da2"), ("光", "guang1"),
    ("放", "fang4"), ("强", "qiang2"), ("即", "ji2"), ("像", "xiang4"), ("难", "nan2"),
    ("且", "qie3"), ("权", "quan2"), ("思", "si1"), ("王", "wang2"), ("象", "xiang4"),
    ("完", "wan2"), ("设", "she4"), ("式", "shi4"), ("色", "se4"), ("路", "lu4"),
    ("记", "ji4"), ("南", "nan2"), ("品", "pin3"), ("住", "zhu4"), ("告", "gao4"),
    ("类", "lei4"), ("求", "qiu2"), ("据", "ju4"), ("程", "cheng2"), ("北", "bei3"),
    ("边", "bian1"), ("死", "si3"), ("张", "zhang1"), ("该", "gai1"), ("交", "jiao1"),
    ("规", "gui1"), ("万", "wan4"), ("取", "qu3"), ("拉", "la1"), ("格", "ge2"),
    ("望", "wang4"), ("觉", "jue2"), ("术", "shu4"), ("领", "ling3"), ("共", "gong4"),
    ("确", "que4"), ("传", "chuan2"), ("师", "shi1"), ("观", "guan1"), ("清", "qing1"),
    ("今", "jin1"), ("切", "qie1"), ("院", "yuan4"), ("让", "rang4"), ("识", "shi2"),
    ("候", "hou4"), ("带", "dai4"), ("导", "dao3"), ("争", "zheng1"), ("运", "yun4"),
    ("笑", "xiao4"), ("飞", "fei1"), ("风", "feng1"), ("步", "bu4"), ("改", "gai3"),
    ("收", "shou1"), ("根", "gen1"), ("干", "gan4"), ("造", "zao4"), ("言", "yan2"),
    ("联", "lian2"), ("持", "chi2"), ("组", "zu3"), ("每", "mei3"), ("济", "ji4"),
    ("车", "che1"), ("亲", "qin1"), ("极", "ji2"), ("林", "lin2"), ("服", "fu2"),
    ("快", "kuai4"), ("办", "ban4"), ("议", "yi4"), ("往", "wang3"), ("元", "yuan2"),
    ("英", "ying1"), ("士", "shi4"), ("证", "zheng4"), ("近", "jin4"), ("失", "shi1"),
    ("转", "zhuan3"), ("夫", "fu1"), ("令", "ling4"), ("准", "zhun3"), ("布", "bu4"),
    ("始", "shi3"), ("怎", "zen3"), ("呢", "ne5"), ("存", "cun2"), ("未", "wei4"),
    ("远", "yuan3"), ("叫", "jiao4"), ("台", "tai2"), ("单", "dan1"), ("影", "ying3"),
    ("字", "zi4"), ("爱", "ai4"), ("击", "ji1"), ("流", "liu2"), ("备", "bei4"),
    ("兵", "bing1"), ("连", "lian2"), ("调", "diao4"), ("深", "shen1"), ("商", "shang1"),
    ("算", "suan4"), ("质", "zhi4"), ("团", "tuan2"), ("集", "ji2"), ("百", "bai3"),
    ("需", "xu1"), ("价", "jia4"), ("花", "hua1"), ("党", "dang3"), ("华", "hua2"),
    ("城", "cheng2"), ("石", "shi2"), ("级", "ji2"), ("整", "zheng3"), ("府", "fu3"),
    ("离", "li2"), ("况", "kuang4"), ("亚", "ya4"), ("请", "qing3"), ("技", "ji4"),
    ("际", "ji4"), ("约", "yue1"), ("示", "shi4"), ("复", "fu4"), ("病", "bing4"),
    ("息", "xi1"), ("究", "jiu1"), ("线", "xian4"), ("似", "si4"), ("官", "guan1"),
    ("火", "huo3"), ("断", "duan4"), ("精", "jing1"), ("满", "man3"), ("支", "zhi1"),
    ("视", "shi4"), ("消", "xiao1"), ("越", "yue4"), ("器", "qi4"), ("容", "rong2"),
    ("照", "zhao4"), ("须", "xu1"), ("九", "jiu3"), ("增", "zeng1"), ("研", "yan2"),
    ("写", "xie3"), ("称", "cheng1"), ("企", "qi3"), ("八", "ba1"), ("功", "gong1"),
    ("吗", "ma5"), ("包", "bao1"), ("片", "pian4"), ("史", "shi3"), ("委", "wei3"),
    ("乎", "hu1"), ("查", "cha2"), ("轻", "qing1"), ("易", "yi4"), ("早", "zao3"),
    ("曾", "ceng2"), ("除", "chu2"), ("农", "nong2"), ("找", "zhao3"), ("装", "zhuang1"),
    ("广", "guang3"), ("显", "xian3"), ("吧", "ba5"), ("阿", "a1"), ("李", "li3"),
    ("标", "biao1"), ("谈", "tan2"), ("吃", "chi1"), ("图", "tu2"), ("念", "nian4"),
    ("六", "liu4"), ("引", "yin3"), ("历", "li4"), ("首", "shou3"), ("医", "yi1"),
    ("局", "ju2"), ("突", "tu1"), ("专", "zhuan1"), ("费", "fei4"), ("号", "hao4"),
    ("尽", "jin4"), ("另", "ling4"), ("周", "zhou1"), ("较", "jiao4"), ("注", "zhu4"),
    ("语", "yu3"), ("仅", "jin3"), ("考", "kao3"), ("落", "luo4"), ("青", "qing1"),
    ("随", "sui2"), ("选", "xuan3"), ("奇", "qi2"), ("七", "qi1"), ("零", "ling2"),
    ("千", "qian1"), ("米", "mi3"), ("河", "he2"), ("站", "zhan4"), ("喜", "xi3"),
    ("欢", "huan1"), ("习", "xi2"), ("友", "you3"), ("朋", "peng2"), ("客", "ke4"),
    ("房", "fang2"), ("店", "dian4"), ("买", "mai3"), ("卖", "mai4"), ("钱", "qian2"),
    ("银", "yin2"), ("红", "hong2"), ("黄", "huang2"), ("蓝", "lan2"), ("绿", "lv4"),
    ("春", "chun1"), ("夏", "xia4"), ("秋", "qiu1"), ("冬", "dong1"), ("雨", "yu3"),
    ("雪", "xue3"), ("云", "yun2"), ("星", "xing1"), ("树", "shu4"), ("草", "cao3"),
    ("鸟", "niao3"), ("鱼", "yu2"), ("牛", "niu2"), ("羊", "yang2"), ("狗", "gou3"),
    ("猫", "mao1"), ("菜", "cai4"), ("饭", "fan4"), ("茶", "cha2"), ("酒", "jiu3"),
    ("妈", "ma1"), ("爸", "ba4"), ("哥", "ge1"), ("弟", "di4"), ("姐", "jie3"),
    ("妹", "mei4"), ("孩", "hai2"), ("男", "nan2"), ("读", "du2"), ("音", "yin1"),
    ("乐", "le4"), ("歌", "ge1"), ("舞", "wu3"), ("画", "hua4"), ("玩", "wan2"),
    ("跑", "pao3"), ("跳", "tiao4"), ("坐", "zuo4"), ("睡", "shui4"), ("醒", "xing3"),
    ("穿", "chuan1"), ("戴", "dai4"), ("脱", "tuo1"), ("洗", "xi3"), ("吹", "chui1"),
    ("唱", "chang4"), ("游", "you2"), ("泳", "yong3"), ("脚", "jiao3"), ("腿", "tui3"),
    ("脸", "lian3"), ("嘴", "zui3"), ("鼻", "bi2"), ("耳", "er3"), ("牙", "ya2"),
    ("哪", "na3"), ("谁", "shui2"), ("您", "nin2"), ("希", "xi1"),
    ("愿", "yuan4"), ("继", "ji4"), ("续", "xu4"), ("简", "jian3"), ("杂", "za2"),
    ("志", "zhi4"), ("章", "zhang1"), ("汉", "han4"), ("句", "ju4"), ("故", "gu4"),
    ("择", "ze2"), ("采", "cai3"), ("词", "ci2"), ("脑", "nao3"), ("析", "xi1"),
    ("危", "wei1"), ("险", "xian3"), ("困", "kun4"), ("虽", "sui1"), ("刚", "gang1"),
    ("刻", "ke4"), ("钟", "zhong1"), ("般", "ban1"), ("尤", "you2"), ("京", "jing1"),
    ("厂", "chang3"), ("村", "cun1"), ("席", "xi2"), ("育", "yu4"), ("值", "zhi2"),
    ("汽", "qi4"), ("诉", "su4"), ("昨", "zuo2"), ("晚", "wan3"), ("午", "wu3"),
    ("屋", "wu1"), ("桌", "zhuo1"), ("椅", "yi3"), ("床", "chuang2"),
    ("窗", "chuang1"), ("纸", "zhi3"), ("笔", "bi3"), ("墨", "mo4"), ("砚", "yan4"),
    ("艾", "ai4"),
]

# Secondary readings: (character, pinyin, divisor of the primary frequency).
HETERONYMS = [
    ("的", "di4", 30), ("的", "di2", 25),
    ("了", "liao3", 20),
    ("地", "de5", 2),
    ("着", "zhao2", 8), ("着", "zhuo2", 20), ("着", "zhao1", 60),
    ("得", "de2", 4), ("得", "dei3", 10),
    ("行", "hang2", 6),
    ("中", "zhong4", 20),
    ("长", "zhang3", 3),
    ("重", "chong2", 6),
    ("还", "huan2", 8),
    ("都", "du1", 12),
    ("发", "fa4", 40),
    ("会", "kuai4", 80),
    ("为", "wei2", 3),
    ("和", "he4", 60),
    ("说", "shui4", 80),
    ("大", "dai4", 60),
    ("要", "yao1", 10),
    ("只", "zhi1", 3),
    ("种", "zhong4", 4),
    ("看", "kan1", 15),
    ("分", "fen4", 6),
    ("好", "hao4", 10),
    ("当", "dang4", 8),
    ("没", "mo4", 50),
    ("间", "jian4", 6),
    ("相", "xiang4", 4),
    ("应", "ying4", 5),
    ("教", "jiao1", 4),
    ("处", "chu3", 4),
    ("系", "ji4", 20),
    ("数", "shu3", 6), ("数", "shuo4", 100),
    ("少", "shao4", 8),
    ("结", "jie1", 10),
    ("调", "tiao2", 3),
    ("传", "zhuan4", 15),
    ("观", "guan4", 30),
    ("切", "qie4", 5),
    ("识", "zhi4", 100),
    ("干", "gan1", 3),
    ("济", "ji3", 30),
    ("亲", "qing4", 60),
    ("服", "fu4", 40),
    ("转", "zhuan4", 8),
    ("令", "ling2", 50),
    ("单", "shan4", 80), ("单", "chan2", 90),
    ("石", "dan4", 60),
    ("似", "shi4", 20),
    ("强", "qiang3", 10), ("强", "jiang4", 40),
    ("觉", "jiao4", 4),
    ("难", "nan4", 10),
    ("尽", "jin3", 4),
    ("语", "yu4", 100),
    ("落", "la4", 20), ("落", "lao4", 60),
    ("查", "zha1", 40),
    ("吧", "ba1", 10),
    ("阿", "e1", 30),
    ("号", "hao2", 20),
    ("度", "duo2", 60),
    ("给", "ji3", 10),
    ("合", "ge3", 100),
    ("提", "di1", 40),
    ("论", "lun2", 80),
    ("别", "bie4", 60),
    ("打", "da2", 80),
    ("更", "geng1", 10),
    ("曾", "zeng1", 8),
    ("六", "lu4", 100),
    ("什", "shi2", 40),
    ("车", "ju1", 100),
    ("万", "mo4", 300),
    ("便", "pian2", 12),
    ("空", "kong4", 6),
    ("正", "zheng1", 30),
    ("将", "jiang4", 8),
    ("与", "yu4", 50),
    ("子", "zi5", 2),
    ("头", "tou5", 4),
    ("家", "jia5", 10),
    ("过", "guo5", 6),
    ("任", "ren2", 50),
    ("乐", "yue4", 2),
    ("儿", "er5", 3),
    ("哪", "na5", 6),
    ("奇", "ji1", 30),
    ("区", "ou1", 200),
    ("期", "ji1", 120),
    ("委", "wei1", 150),
    ("艾", "yi4", 12),
]

# Characters pronounced yi in some tone; together with the yi-readings in
# CHARS these exceed one hundred, matching the notorious homophone pile.
YI_EXTRA = [
    ("衣", "yi1"), ("依", "yi1"), ("伊", "yi1"), ("壹", "yi1"), ("揖", "yi1"),
    ("漪", "yi1"), ("铱", "yi1"), ("噫", "yi1"), ("咿", "yi1"), ("黟", "yi1"),
    ("猗", "yi1"), ("祎", "yi1"),
    ("疑", "yi2"), ("移", "yi2"), ("遗", "yi2"), ("仪", "yi2"), ("宜", "yi2"),
    ("姨", "yi2"), ("夷", "yi2"), ("怡", "yi2"), ("贻", "yi2"), ("彝", "yi2"),
    ("颐", "yi2"), ("胰", "yi2"), ("饴", "yi2"), ("沂", "yi2"), ("诒", "yi2"),
    ("圯", "yi2"), ("咦", "yi2"), ("嶷", "yi2"), ("眙", "yi2"), ("痍", "yi2"),
    ("乙", "yi3"), ("蚁", "yi3"), ("倚", "yi3"), ("矣", "yi3"), ("迤", "yi3"),
    ("苡", "yi3"), ("钇", "yi3"), ("旖", "yi3"), ("舣", "yi3"), ("酏", "yi3"),
    ("扆", "yi3"),
    ("艺", "yi4"), ("亿", "yi4"), ("译", "yi4"), ("异", "yi4"), ("益", "yi4"),
    ("忆", "yi4"), ("疫", "yi4"), ("役", "yi4"), ("抑", "yi4"), ("邑", "yi4"),
    ("屹", "yi4"), ("亦", "yi4"), ("裔", "yi4"), ("逸", "yi4"), ("翼", "yi4"),
    ("翌", "yi4"), ("溢", "yi4"), ("毅", "yi4"), ("薏", "yi4"), ("绎", "yi4"),
    ("诣", "yi4"), ("驿", "yi4"), ("弈", "yi4"), ("奕", "yi4"), ("懿", "yi4"),
    ("轶", "yi4"), ("谊", "yi4"), ("翊", "yi4"), ("熠", "yi4"), ("弋", "yi4"),
    ("臆", "yi4"), ("呓", "yi4"), ("峄", "yi4"), ("怿", "yi4"), ("悒", "yi4"),
    ("缢", "yi4"), ("殪", "yi4"), ("埸", "yi4"), ("挹", "yi4"), ("镒", "yi4"),
    ("佾", "yi4"), ("肄", "yi4"), ("镱", "yi4"), ("蜴", "yi4"), ("翳", "yi4"),
    ("癔", "yi4"), ("嗌", "yi4"), ("刈", "yi4"), ("浥", "yi4"), ("燚", "yi4"),
    ("鹢", "yi4"), ("羿", "yi4"), ("枻", "yi4"), ("斁", "yi4"), ("泆", "yi4"),
    ("劓", "yi4"), ("瘗", "yi4"),
]

# (word, pinyin), ordered by estimated frequency rank.
WORDS = [
    ("我们", "wo3 men5"), ("他们", "ta1 men5"), ("你们", "ni3 men5"),
    ("她们", "ta1 men5"), ("它们", "ta1 men5"), ("人们", "ren2 men5"),
    ("中国", "zhong1 guo2"), ("美国", "mei3 guo2"), ("英国", "ying1 guo2"),
    ("法国", "fa3 guo2"), ("德国", "de2 guo2"), ("国家", "guo2 jia1"),
    ("世界", "shi4 jie4"), ("人民", "ren2 min2"), ("社会", "she4 hui4"),
    ("经济", "jing1 ji4"), ("政府", "zheng4 fu3"), ("政治", "zheng4 zhi4"),
    ("文化", "wen2 hua4"), ("历史", "li4 shi3"), ("问题", "wen4 ti2"),
    ("发展", "fa1 zhan3"), ("工作", "gong1 zuo4"), ("时候", "shi2 hou5"),
    ("时间", "shi2 jian1"), ("现在", "xian4 zai4"), ("今天", "jin1 tian1"),
    ("明天", "ming2 tian1"), ("昨天", "zuo2 tian1"), ("地方", "di4 fang1"),
    ("孩子", "hai2 zi5"), ("学生", "xue2 sheng5"), ("老师", "lao3 shi1"),
    ("学习", "xue2 xi2"), ("学校", "xue2 xiao4"), ("大学", "da4 xue2"),
    ("中学", "zhong1 xue2"), ("小学", "xiao3 xue2"), ("朋友", "peng2 you5"),
    ("东西", "dong1 xi5"), ("事情", "shi4 qing5"), ("生活", "sheng1 huo2"),
    ("生产", "sheng1 chan3"), ("生命", "sheng1 ming4"), ("身体", "shen1 ti3"),
    ("心里", "xin1 li3"), ("心情", "xin1 qing2"), ("感情", "gan3 qing2"),
    ("感觉", "gan3 jue2"), ("觉得", "jue2 de5"), ("认为", "ren4 wei2"),
    ("以为", "yi3 wei2"), ("知道", "zhi1 dao4"), ("认识", "ren4 shi5"),
    ("了解", "liao3 jie3"), ("理解", "li3 jie3"), ("明白", "ming2 bai5"),
    ("清楚", "qing1 chu5"), ("希望", "xi1 wang4"), ("喜欢", "xi3 huan5"),
    ("愿意", "yuan4 yi4"), ("需要", "xu1 yao4"), ("必须", "bi4 xu1"),
    ("应该", "ying1 gai1"), ("可以", "ke3 yi3"), ("可能", "ke3 neng2"),
    ("可是", "ke3 shi4"), ("但是", "dan4 shi4"), ("因为", "yin1 wei4"),
    ("所以", "suo3 yi3"), ("如果", "ru2 guo3"), ("虽然", "sui1 ran2"),
    ("然后", "ran2 hou4"), ("已经", "yi3 jing1"), ("曾经", "ceng2 jing1"),
    ("正在", "zheng4 zai4"), ("马上", "ma3 shang4"), ("立刻", "li4 ke4"),
    ("刚才", "gang1 cai2"), ("以后", "yi3 hou4"), ("以前", "yi3 qian2"),
    ("之后", "zhi1 hou4"), ("之前", "zhi1 qian2"), ("最后", "zui4 hou4"),
    ("最近", "zui4 jin4"), ("开始", "kai1 shi3"), ("结束", "jie2 shu4"),
    ("继续", "ji4 xu4"), ("进行", "jin4 xing2"), ("出现", "chu1 xian4"),
    ("发现", "fa1 xian4"), ("发生", "fa1 sheng1"), ("表示", "biao3 shi4"),
    ("表现", "biao3 xian4"), ("成为", "cheng2 wei2"), ("作为", "zuo4 wei2"),
    ("通过", "tong1 guo4"), ("经过", "jing1 guo4"), ("根据", "gen1 ju4"),
    ("由于", "you2 yu2"), ("关于", "guan1 yu2"), ("对于", "dui4 yu2"),
    ("方面", "fang1 mian4"), ("方法", "fang1 fa3"), ("方式", "fang1 shi4"),
    ("情况", "qing2 kuang4"), ("结果", "jie2 guo3"), ("原因", "yuan2 yin1"),
    ("影响", "ying3 xiang3"), ("重要", "zhong4 yao4"), ("主要", "zhu3 yao4"),
    ("重大", "zhong4 da4"), ("伟大", "wei3 da4"), ("巨大", "ju4 da4"),
    ("一般", "yi1 ban1"), ("一定", "yi1 ding4"), ("一起", "yi1 qi3"),
    ("一样", "yi1 yang4"), ("一直", "yi1 zhi2"), ("一些", "yi1 xie1"),
    ("一切", "yi1 qie4"), ("第一", "di4 yi1"), ("第二", "di4 er4"),
    ("十分", "shi2 fen1"), ("非常", "fei1 chang2"), ("特别", "te4 bie2"),
    ("尤其", "you2 qi2"), ("比较", "bi3 jiao4"), ("更加", "geng4 jia1"),
    ("研究", "yan2 jiu1"), ("科学", "ke1 xue2"), ("技术", "ji4 shu4"),
    ("艺术", "yi4 shu4"), ("音乐", "yin1 yue4"), ("体育", "ti3 yu4"),
    ("教育", "jiao4 yu4"), ("教学", "jiao4 xue2"), ("知识", "zhi1 shi5"),
    ("思想", "si1 xiang3"), ("精神", "jing1 shen2"), ("物质", "wu4 zhi4"),
    ("能力", "neng2 li4"), ("水平", "shui3 ping2"), ("质量", "zhi4 liang4"),
    ("数量", "shu4 liang4"), ("数字", "shu4 zi4"), ("价格", "jia4 ge2"),
    ("价值", "jia4 zhi2"), ("市场", "shi4 chang3"), ("企业", "qi3 ye4"),
    ("公司", "gong1 si1"), ("工厂", "gong1 chang3"), ("工人", "gong1 ren2"),
    ("农民", "nong2 min2"), ("农业", "nong2 ye4"), ("工业", "gong1 ye4"),
    ("商业", "shang1 ye4"), ("银行", "yin2 hang2"), ("城市", "cheng2 shi4"),
    ("农村", "nong2 cun1"), ("北京", "bei3 jing1"), ("上海", "shang4 hai3"),
    ("南京", "nan2 jing1"), ("东方", "dong1 fang1"), ("西方", "xi1 fang1"),
    ("南方", "nan2 fang1"), ("北方", "bei3 fang1"), ("地区", "di4 qu1"),
    ("区别", "qu1 bie2"), ("国际", "guo2 ji4"), ("全国", "quan2 guo2"),
    ("全部", "quan2 bu4"), ("部分", "bu4 fen5"), ("分析", "fen1 xi1"),
    ("分别", "fen1 bie2"), ("别人", "bie2 ren2"), ("个人", "ge4 ren2"),
    ("人员", "ren2 yuan2"), ("人口", "ren2 kou3"), ("人类", "ren2 lei4"),
    ("大家", "da4 jia1"), ("电话", "dian4 hua4"), ("电脑", "dian4 nao3"),
    ("电视", "dian4 shi4"), ("电影", "dian4 ying3"), ("火车", "huo3 che1"),
    ("汽车", "qi4 che1"), ("飞机", "fei1 ji1"), ("机器", "ji1 qi4"),
    ("机会", "ji1 hui4"), ("会议", "hui4 yi4"), ("委员", "wei3 yuan2"),
    ("主席", "zhu3 xi2"), ("主任", "zhu3 ren4"), ("领导", "ling3 dao3"),
    ("干部", "gan4 bu4"), ("军队", "jun1 dui4"), ("部队", "bu4 dui4"),
    ("战争", "zhan4 zheng1"), ("和平", "he2 ping2"), ("安全", "an1 quan2"),
    ("危险", "wei1 xian3"), ("困难", "kun4 nan5"), ("容易", "rong2 yi4"),
    ("简单", "jian3 dan1"), ("新闻", "xin1 wen2"), ("消息", "xiao1 xi5"),
    ("报告", "bao4 gao4"), ("报纸", "bao4 zhi3"), ("文章", "wen2 zhang1"),
    ("文字", "wen2 zi4"), ("语言", "yu3 yan2"), ("汉语", "han4 yu3"),
    ("英语", "ying1 yu3"), ("句子", "ju4 zi5"), ("故事", "gu4 shi5"),
    ("小说", "xiao3 shuo1"), ("作品", "zuo4 pin3"), ("作者", "zuo4 zhe3"),
    ("作用", "zuo4 yong4"), ("使用", "shi3 yong4"), ("利用", "li4 yong4"),
    ("应用", "ying4 yong4"), ("采用", "cai3 yong4"), ("选择", "xuan3 ze2"),
    ("衣服", "yi1 fu5"), ("意思", "yi4 si5"), ("先生", "xian1 sheng5"),
    ("告诉", "gao4 su5"), ("大夫", "dai4 fu5"), ("读书", "du2 shu1"),
    ("唱歌", "chang4 ge1"), ("跳舞", "tiao4 wu3"), ("游泳", "you2 yong3"),
    ("睡觉", "shui4 jiao4"), ("吃饭", "chi1 fan4"), ("喝茶", "he1 cha2"),
    ("回家", "hui2 jia1"), ("回来", "hui2 lai2"), ("回去", "hui2 qu4"),
    ("出来", "chu1 lai2"), ("出去", "chu1 qu4"), ("进来", "jin4 lai2"),
    ("起来", "qi3 lai2"), ("下来", "xia4 lai2"), ("下去", "xia4 qu4"),
    ("上来", "shang4 lai2"), ("上去", "shang4 qu4"), ("过来", "guo4 lai2"),
    ("过去", "guo4 qu4"), ("同学", "tong2 xue2"), ("同志", "tong2 zhi4"),
    ("同时", "tong2 shi2"), ("一同", "yi1 tong2"), ("春天", "chun1 tian1"),
    ("夏天", "xia4 tian1"), ("秋天", "qiu1 tian1"), ("冬天", "dong1 tian1"),
    ("天气", "tian1 qi4"), ("下雨", "xia4 yu3"), ("下雪", "xia4 xue3"),
    ("医生", "yi1 sheng1"), ("医院", "yi1 yuan4"), ("医学", "yi1 xue2"),
    ("意见", "yi4 jian4"), ("意义", "yi4 yi4"), ("会意", "hui4 yi4"),
    ("一亿", "yi1 yi4"), ("议员", "yi4 yuan2"), ("译文", "yi4 wen2"),
    ("翻译", "fan1 yi4"), ("容颜", "rong2 yan2"), ("颜色", "yan2 se4"),
    ("道理", "dao4 li3"), ("理论", "li3 lun4"), ("条件", "tiao2 jian4"),
    ("建设", "jian4 she4"), ("建议", "jian4 yi4"), ("设备", "she4 bei4"),
    ("准备", "zhun3 bei4"), ("组织", "zu3 zhi1"), ("计划", "ji4 hua4"),
    ("规定", "gui1 ding4"), ("制度", "zhi4 du4"), ("管理", "guan3 li3"),
    ("经验", "jing1 yan4"), ("活动", "huo2 dong4"), ("运动", "yun4 dong4"),
    ("行动", "xing2 dong4"), ("交通", "jiao1 tong1"), ("环境", "huan2 jing4"),
    ("资源", "zi1 yuan2"), ("能源", "neng2 yuan2"), ("信息", "xin4 xi1"),
    ("系统", "xi4 tong3"), ("基础", "ji1 chu3"), ("标准", "biao1 zhun3"),
    ("目标", "mu4 biao1"), ("目的", "mu4 di4"), ("任务", "ren4 wu5"),
    ("责任", "ze2 ren4"), ("服务", "fu2 wu4"), ("帮助", "bang1 zhu4"),
    ("支持", "zhi1 chi2"), ("要求", "yao1 qiu2"), ("提高", "ti2 gao1"),
    ("提出", "ti2 chu1"), ("增加", "zeng1 jia1"), ("减少", "jian3 shao3"),
    ("改变", "gai3 bian4"), ("变化", "bian4 hua4"), ("发达", "fa1 da2"),
]

# Characters used only by WORDS above.
WORD_ONLY_CHARS = [
    ("楚", "chu3"), ("伟", "wei3"), ("巨", "ju4"), ("闻", "wen2"),
    ("织", "zhi1"), ("划", "hua4"), ("验", "yan4"), ("环", "huan2"),
    ("境", "jing4"), ("源", "yuan2"), ("础", "chu3"), ("责", "ze2"),
    ("帮", "bang1"), ("助", "zhu4"), ("减", "jian3"), ("翻", "fan1"),
    ("颜", "yan2"), ("喝", "he1"), ("束", "shu4"), ("校", "xiao4"), ("响", "xiang3"),
]


def auto_freq(rank, scale, offset):
    return max(1, scale // (rank + offset))


def build_rows():
    rows = []
    char_primary = {}
    seen = set()

    for rank, (char, py) in enumerate(CHARS + WORD_ONLY_CHARS):
        assert char not in char_primary, f"duplicate primary for {char}"
        freq = auto_freq(rank, 500_000, 2)
        char_primary[char] = freq
        rows.append((char, py, freq))
        seen.add((char, py))

    for char, py, divisor in HETERONYMS:
        assert char in char_primary, f"heteronym for unknown char {char}"
        assert (char, py) not in seen, f"duplicate reading {char} {py}"
        rows.append((char, py, max(1, char_primary[char] // divisor)))
        seen.add((char, py))

    for rank, (char, py) in enumerate(YI_EXTRA):
        assert (char, py) not in seen, f"duplicate reading {char} {py}"
        freq = max(60, 200 - rank)
        if char not in char_primary:
            char_primary[char] = freq
        rows.append((char, py, freq))
        seen.add((char, py))

    word_seen = set()
    for rank, (word, py) in enumerate(WORDS):
        assert word not in word_seen, f"duplicate word {word}"
        word_seen.add(word)
        rows.append((word, py, auto_freq(rank, 300_000, 4)))
    return rows, char_primary


def validate(rows, char_primary):
    readings = {}
    for entry, py, freq in rows:
        syllables = [parse_pinyin(tok) for tok in py.split()]
        assert len(syllables) == len(entry), f"{entry}: {len(entry)} chars, {len(syllables)} syllables"
        if len(entry) == 1:
            readings.setdefault(entry, set()).add(syllables[0])

    problems = []
    for entry, py, freq in rows:
        if len(entry) == 1:
            continue
        for char, tok in zip(entry, py.split()):
            s = parse_pinyin(tok)
            have = readings.get(char, set())
            if s.tone in (1, 2, 3, 4):
                ok = s in have
            else:
                ok = any(r.toneless == s.toneless for r in have)
            if not ok:
                problems.append(f"{entry}: {char} read {tok} not among {sorted(map(str, have))}")
    if problems:
        raise SystemExit("word/char reading mismatches:\n" + "\n".join(problems))

    yi_chars = {c for c, rs in readings.items()
                if any(r.initial == "" and r.final == "i" for r in rs)}
    assert len(yi_chars) > 100, f"only {len(yi_chars)} yi-characters"

    scheme = load_scheme_file(os.path.join(
        os.path.dirname(__file__), "..", "src", "zhbraille", "data", "scheme.tsv"))
    for entry, py, freq in rows:
        for tok in py.split():
            s = parse_pinyin(tok)
            if s.initial:
                assert s.initial in scheme.initial_map, f"scheme lacks initial {s.initial}"
            assert s.final in scheme.final_map, f"scheme lacks final {s.final}"
    return len(yi_chars)


def main():
    rows, char_primary = build_rows()
    yi_count = validate(rows, char_primary)
    rows.sort(key=lambda r: (-r[2], r[0], r[1]))
    out = os.path.join(os.path.dirname(__file__), "..", "src", "zhbraille", "data", "lexicon.tsv")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# Pronunciation lexicon: word<TAB>tone-number pinyin<TAB>frequency.\n")
        fh.write("# Hand-curated; regenerate with scripts/make_lexicon_table.py.\n")
        for entry, py, freq in rows:
            fh.write(f"{entry}\t{py}\t{freq}\n")
    chars = sum(1 for e, _, _ in rows if len(e) == 1)
    words = sum(1 for e, _, _ in rows if len(e) > 1)
    print(f"wrote {out}: {chars} character rows, {words} word rows, "
          f"{yi_count} distinct yi-characters")


if __name__ == "__main__":
    main()
