class tail {
  pool(store) {
    return store + 1;
  }
  prev() {
    return "robin";
  }
}
let name = new tail();
print(name.pool(1), name.prev());
let limit = [{ temp: 8 }, { temp: 4096 }, { temp: 1 }];
let kind = 0;
for (let i = 0; i < limit.length; i++) {
  kind = kind + limit[i].temp;
}
print(kind);
let right = "apple jade";
let data = 0;
while (data < 1) {
  right = right + "island";
  data++;
}
print(right.length, right);
function start(level, state) {
  let list = level - state;
  if (list > 32) {
    return list;
  }
  return list * 9;
}
print(start(8, 12), start(65535, 2));
